//! Fermionic sums for fusion products of Kirillov-Reshetikhin modules.
//!
//! For an algebra of rank `r`, a multiset `R` of KR labels `a·ω_i` and a
//! dominant weight `λ`, the sum runs over configurations `m_a^(i) ≥ 0` with
//! `Σ_a a·m_a^(i) = (C⁻¹(n − l))_i`, where `n = Σ_p a_p ω_{i_p}` and `l` are
//! the coordinates of `λ`. Each configuration contributes
//!
//! ```text
//! q^{Q(m, n)} ∏_{(i,a)} [P_a^(i) + m_a^(i), m_a^(i)]_q
//! ```
//!
//! with the vacancy numbers
//!
//! ```text
//! P_a^(i) = Σ_b min(a,b) n_b^(i)
//!         + Σ_{j≠i} Σ_b min(|C_ij| b, |C_ji| a) m_b^(j)
//!         − 2 Σ_b min(a,b) m_b^(i)
//! ```
//!
//! and `Q = mᵗAm − ½ mᵗBm − mᵗAn` for `A = δ_ij min(a,b)` and
//! `B = (1 − δ_ij) min(|C_ij| b, |C_ji| a)`. The graded multiplicity is
//! `M(q) = S(q⁻¹)` where `S` is the sum above.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::char_oracle::weyl_dimension;
use crate::error::Error;
use crate::lie::{AlgebraData, Weight};
use crate::qpoly::{gamma_binomial, q_binomial, LaurentPoly};

/// One KR label `level · ω_node` (node index 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KrFactor {
    pub node: usize,
    pub level: u32,
}

impl fmt::Display for KrFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*w{}", self.level, self.node + 1)
    }
}

/// A multiset of KR labels. Equality ignores entry order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KRWeightSpec {
    rank: usize,
    /// `(node, level) → n_level^(node)`
    counts: BTreeMap<(usize, u32), u32>,
}

impl KRWeightSpec {
    pub fn new<I>(rank: usize, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = KrFactor>,
    {
        let mut counts = BTreeMap::new();
        for e in entries {
            if e.node >= rank {
                return Err(Error::NodeOutOfRange { node: e.node + 1, rank });
            }
            if e.level == 0 {
                return Err(Error::ZeroLevel);
            }
            *counts.entry((e.node, e.level)).or_insert(0) += 1;
        }
        Ok(KRWeightSpec { rank, counts })
    }

    /// A single factor `level · ω_node`.
    pub fn single(rank: usize, factor: KrFactor) -> Result<Self, Error> {
        Self::new(rank, [factor])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of factors `N`.
    pub fn len(&self) -> usize {
        self.counts.values().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `n_level^(node)`.
    pub fn count(&self, node: usize, level: u32) -> u32 {
        self.counts.get(&(node, level)).copied().unwrap_or(0)
    }

    /// `(node, level, count)` in ascending `(node, level)` order.
    pub fn counts(&self) -> impl Iterator<Item = (usize, u32, u32)> + '_ {
        self.counts.iter().map(|(&(i, a), &c)| (i, a, c))
    }

    /// Factors sorted by `(node, level)`, repeated according to multiplicity.
    pub fn entries(&self) -> Vec<KrFactor> {
        let mut out = Vec::with_capacity(self.len());
        for (&(node, level), &c) in &self.counts {
            for _ in 0..c {
                out.push(KrFactor { node, level });
            }
        }
        out
    }

    /// `Σ_p a_p ω_{i_p}` in fundamental coordinates (the vector `n`).
    pub fn total_weight(&self) -> Weight {
        let mut w = vec![0i64; self.rank];
        for (&(node, level), &c) in &self.counts {
            w[node] += i64::from(level) * i64::from(c);
        }
        w
    }
}

impl fmt::Display for KRWeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Dominant integral weight `λ = Σ l_i ω_i`, `l_i ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(coords: Weight) -> Result<Self, Error> {
        if coords.iter().any(|&x| x < 0) {
            return Err(Error::NegativeWeight);
        }
        Ok(DominantWeight(coords))
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Weight {
        self.0
    }
}

impl fmt::Display for DominantWeight {
    /// `c1*w1+c2*w2+…` over the nonzero coordinates, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{c}*w{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// One summand of the fermionic sum: `m_a^(i)` for every node `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MConfig {
    /// Per node, `(a, m_a)` pairs with `m_a ≥ 1`, ascending in `a`.
    parts: Vec<Vec<(u32, u32)>>,
}

impl MConfig {
    pub fn empty(rank: usize) -> Self {
        MConfig { parts: vec![Vec::new(); rank] }
    }

    /// Builds a configuration from `(node, a, m)` triples; zero `m` is dropped.
    pub fn from_triples<I>(rank: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, u32, u32)>,
    {
        let mut acc: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new(); rank];
        for (i, a, m) in triples {
            if m > 0 {
                *acc[i].entry(a).or_insert(0) += m;
            }
        }
        MConfig { parts: acc.into_iter().map(|n| n.into_iter().collect()).collect() }
    }

    pub fn get(&self, node: usize, a: u32) -> u32 {
        self.parts[node].iter().find(|&&(b, _)| b == a).map_or(0, |&(_, m)| m)
    }

    /// `(node, a, m_a^(node))` over the support, lexicographic in `(node, a)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u32)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, p)| p.iter().map(move |&(a, m)| (i, a, m)))
    }

    pub fn node_parts(&self, node: usize) -> &[(u32, u32)] {
        &self.parts[node]
    }

    /// `Σ_a a·m_a^(node)`.
    pub fn node_total(&self, node: usize) -> u64 {
        self.parts[node].iter().map(|&(a, m)| u64::from(a) * u64::from(m)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(Vec::is_empty)
    }
}

/// Vacancy numbers `P_a^(i)` keyed by `(node, a)`.
pub type VacancyVector = BTreeMap<(usize, u32), i64>;

/// Where the restricted sum demands `P_a^(i) ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Positivity {
    /// Only at `(i, a)` with `m_a^(i) > 0`.
    #[default]
    Occupied,
    /// At every `(i, a)` in `support(m) ∪ support(n)`.
    Everywhere,
    /// No filter; the Gaussian binomials vanish on their own.
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Restricted sum, graded: returns `M(q)`.
    Kr1Graded,
    /// Unrestricted sum at `q = 1`.
    Kr2AtOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FermionicValue {
    Graded(LaurentPoly),
    AtOne(BigInt),
}

/// `C⁻¹(n − l)` when it is a nonnegative integer vector; `None` means the
/// multiplicity of `λ` vanishes identically.
pub fn total_m(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight) -> Option<Vec<u64>> {
    let n = r.total_weight();
    let diff: Weight = n.iter().zip(lam.coords()).map(|(a, b)| a - b).collect();
    let m = alg.to_root_coords(&diff)?;
    m.into_iter().map(|x| u64::try_from(x).ok()).collect()
}

/// Partitions of `n` as multiplicity lists `[(a, m_a)]`, in ascending
/// lexicographic order of `(m_1, m_2, …)`.
fn partitions_by_multiplicity(n: u64) -> Vec<Vec<(u32, u32)>> {
    fn rec(a: u64, rem: u64, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if a > rem {
            return;
        }
        for m in 0..=rem / a {
            if m > 0 {
                cur.push((a as u32, m as u32));
            }
            rec(a + 1, rem - a * m, cur, out);
            if m > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

/// Streams every configuration with the given per-node totals, one per tuple
/// of partitions, in lexicographic order of `(m_1^(1), m_2^(1), …, m_1^(2), …)`.
pub fn enumerate_mconfigs(mtotal: &[u64]) -> MConfigIter {
    let per_node: Vec<Vec<Vec<(u32, u32)>>> = mtotal.iter().map(|&t| partitions_by_multiplicity(t)).collect();
    MConfigIter { cursor: vec![0; per_node.len()], per_node, done: false }
}

pub struct MConfigIter {
    per_node: Vec<Vec<Vec<(u32, u32)>>>,
    cursor: Vec<usize>,
    done: bool,
}

impl MConfigIter {
    /// Number of configurations in the full stream: `∏ p(mtotal_i)`.
    pub fn total(&self) -> usize {
        self.per_node.iter().map(Vec::len).product()
    }
}

impl Iterator for MConfigIter {
    type Item = MConfig;

    fn next(&mut self) -> Option<MConfig> {
        if self.done {
            return None;
        }
        let parts = self.cursor.iter().enumerate().map(|(i, &c)| self.per_node[i][c].clone()).collect();
        // odometer, last node fastest
        let mut k = self.cursor.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.cursor[k] += 1;
            if self.cursor[k] < self.per_node[k].len() {
                break;
            }
            self.cursor[k] = 0;
        }
        Some(MConfig { parts })
    }
}

/// Precomputed per-node data shared by all configurations of one sum.
struct Context<'a> {
    alg: &'a AlgebraData,
    /// Per node, `(b, n_b)` pairs.
    inputs: Vec<Vec<(u32, u32)>>,
    /// Per node, `(j, |C_ij|, |C_ji|)` for adjacent `j`.
    neighbors: Vec<Vec<(usize, i64, i64)>>,
}

impl<'a> Context<'a> {
    fn new(alg: &'a AlgebraData, r: &KRWeightSpec) -> Self {
        let rank = alg.rank();
        assert_eq!(rank, r.rank(), "weight spec and algebra have different ranks");
        let mut inputs = vec![Vec::new(); rank];
        for (i, a, c) in r.counts() {
            inputs[i].push((a, c));
        }
        let neighbors = (0..rank)
            .map(|i| {
                (0..rank)
                    .filter(|&j| j != i && alg.cartan(i, j) != 0)
                    .map(|j| (j, alg.cartan(i, j).abs(), alg.cartan(j, i).abs()))
                    .collect()
            })
            .collect();
        Context { alg, inputs, neighbors }
    }

    fn vacancy_at(&self, mc: &MConfig, i: usize, a: u32) -> i64 {
        let a64 = i64::from(a);
        let mut p: i64 = self.inputs[i].iter().map(|&(b, n)| a64.min(i64::from(b)) * i64::from(n)).sum();
        for &(j, cij, cji) in &self.neighbors[i] {
            for &(b, m) in mc.node_parts(j) {
                p += (cij * i64::from(b)).min(cji * a64) * i64::from(m);
            }
        }
        for &(b, m) in mc.node_parts(i) {
            p -= 2 * a64.min(i64::from(b)) * i64::from(m);
        }
        p
    }

    /// Keys `support(m) ∪ support(n)` in ascending `(node, a)` order.
    fn vacancy_keys(&self, mc: &MConfig) -> Vec<(usize, u32)> {
        let mut keys: Vec<(usize, u32)> = mc.iter().map(|(i, a, _)| (i, a)).collect();
        for (i, inp) in self.inputs.iter().enumerate() {
            keys.extend(inp.iter().map(|&(a, _)| (i, a)));
        }
        keys.sort_unstable();
        keys.dedup();
        keys
    }

    fn vacancies(&self, mc: &MConfig) -> VacancyVector {
        self.vacancy_keys(mc).into_iter().map(|(i, a)| ((i, a), self.vacancy_at(mc, i, a))).collect()
    }

    fn quadratic(&self, mc: &MConfig) -> i64 {
        let mut diag = 0i64;
        let mut linear = 0i64;
        let mut off = 0i64;
        for i in 0..self.alg.rank() {
            let parts = mc.node_parts(i);
            for &(a, ma) in parts {
                let (a, ma) = (i64::from(a), i64::from(ma));
                for &(b, mb) in parts {
                    diag += a.min(i64::from(b)) * ma * i64::from(mb);
                }
                for &(b, nb) in &self.inputs[i] {
                    linear += a.min(i64::from(b)) * ma * i64::from(nb);
                }
                for &(j, cij, cji) in &self.neighbors[i] {
                    for &(b, mb) in mc.node_parts(j) {
                        off += (cij * i64::from(b)).min(cji * a) * ma * i64::from(mb);
                    }
                }
            }
        }
        assert!(off % 2 == 0, "mᵗBm must be even since B is symmetric with zero diagonal blocks");
        diag - off / 2 - linear
    }

    fn admissible(&self, mc: &MConfig, positivity: Positivity) -> bool {
        match positivity {
            Positivity::Off => true,
            Positivity::Occupied => mc.iter().all(|(i, a, _)| self.vacancy_at(mc, i, a) >= 0),
            Positivity::Everywhere => self.vacancy_keys(mc).into_iter().all(|(i, a)| self.vacancy_at(mc, i, a) >= 0),
        }
    }
}

/// `P_a^(i)` at every `(i, a)` in `support(mc) ∪ support(n)`.
pub fn vacancy_numbers(alg: &AlgebraData, r: &KRWeightSpec, mc: &MConfig) -> VacancyVector {
    Context::new(alg, r).vacancies(mc)
}

/// `Q(m, n) = mᵗAm − ½ mᵗBm − mᵗAn`.
pub fn quadratic_exponent(alg: &AlgebraData, r: &KRWeightSpec, mc: &MConfig) -> i64 {
    Context::new(alg, r).quadratic(mc)
}

/// The literal sum `S(q) = Σ q^Q ∏ [P + m, m]_q` over the configurations
/// admitted by `positivity`.
pub fn fermionic_sum(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight, positivity: Positivity) -> LaurentPoly {
    let Some(mtotal) = total_m(alg, r, lam) else {
        return LaurentPoly::zero();
    };
    let ctx = Context::new(alg, r);
    let mut memo: BTreeMap<(i64, i64), LaurentPoly> = BTreeMap::new();
    let mut sum = LaurentPoly::zero();
    for mc in enumerate_mconfigs(&mtotal) {
        if !ctx.admissible(&mc, positivity) {
            continue;
        }
        let mut term = LaurentPoly::q_pow(ctx.quadratic(&mc));
        for (i, a, m) in mc.iter() {
            let key = (ctx.vacancy_at(&mc, i, a) + i64::from(m), i64::from(m));
            let binom = memo.entry(key).or_insert_with(|| q_binomial(key.0, key.1));
            if binom.is_zero() {
                term = LaurentPoly::zero();
                break;
            }
            term = &term * binom;
        }
        sum += &term;
    }
    sum
}

/// Graded multiplicity `M_{λ,R}(q) = S(q⁻¹)` with the default positivity scope.
pub fn kr1_polynomial(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight) -> LaurentPoly {
    kr1_polynomial_with(alg, r, lam, Positivity::Occupied)
}

pub fn kr1_polynomial_with(
    alg: &AlgebraData,
    r: &KRWeightSpec,
    lam: &DominantWeight,
    positivity: Positivity,
) -> LaurentPoly {
    fermionic_sum(alg, r, lam, positivity).substitute_inverse()
}

/// `M_{λ,R}(1)` from ordinary binomials: the restricted sum at `q = 1`.
pub fn kr1_count(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight) -> BigInt {
    let Some(mtotal) = total_m(alg, r, lam) else {
        return BigInt::zero();
    };
    let ctx = Context::new(alg, r);
    let mut sum = BigInt::zero();
    'configs: for mc in enumerate_mconfigs(&mtotal) {
        let mut term = BigInt::from(1);
        for (i, a, m) in mc.iter() {
            let p = ctx.vacancy_at(&mc, i, a);
            if p < 0 {
                continue 'configs;
            }
            term *= gamma_binomial(p + i64::from(m), i64::from(m));
        }
        sum += term;
    }
    sum
}

/// The unrestricted sum at `q = 1`: every configuration, with binomials
/// continued to negative upper arguments. Individual terms may be negative.
pub fn kr2_value(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight) -> BigInt {
    let Some(mtotal) = total_m(alg, r, lam) else {
        return BigInt::zero();
    };
    let ctx = Context::new(alg, r);
    let mut sum = BigInt::zero();
    for mc in enumerate_mconfigs(&mtotal) {
        let mut term = BigInt::from(1);
        for (i, a, m) in mc.iter() {
            term *= gamma_binomial(ctx.vacancy_at(&mc, i, a) + i64::from(m), i64::from(m));
            if term.is_zero() {
                break;
            }
        }
        sum += term;
    }
    sum
}

pub fn fermionic_polynomial(
    alg: &AlgebraData,
    r: &KRWeightSpec,
    lam: &DominantWeight,
    variant: Variant,
) -> FermionicValue {
    match variant {
        Variant::Kr1Graded => FermionicValue::Graded(kr1_polynomial(alg, r, lam)),
        Variant::Kr2AtOne => FermionicValue::AtOne(kr2_value(alg, r, lam)),
    }
}

/// Every dominant `λ` for which `total_m` is present, sorted
/// colexicographically.
pub fn support_weights(alg: &AlgebraData, r: &KRWeightSpec) -> Vec<DominantWeight> {
    alg.dominant_weights_below(&r.total_weight()).into_iter().map(DominantWeight).collect()
}

/// `Σ_λ M_{λ,R}(1) · dim V_λ`.
pub fn fermionic_dimension(alg: &AlgebraData, r: &KRWeightSpec) -> BigInt {
    support_weights(alg, r)
        .iter()
        .map(|lam| {
            let c = kr1_count(alg, r, lam);
            if c.is_zero() {
                c
            } else {
                c * weyl_dimension(alg, lam)
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_algebra, AlgebraType, Family};
    use alloc::string::ToString;

    fn alg(f: Family, r: usize) -> AlgebraData {
        build_algebra(AlgebraType::new(f, r).unwrap())
    }

    fn spec(rank: usize, items: &[(u32, usize)]) -> KRWeightSpec {
        KRWeightSpec::new(rank, items.iter().map(|&(level, node)| KrFactor { node: node - 1, level })).unwrap()
    }

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn total_m_cases() {
        let a1 = alg(Family::A, 1);
        assert_eq!(total_m(&a1, &spec(1, &[(1, 1), (1, 1)]), &w(&[0])), Some(vec![1]));
        assert_eq!(total_m(&a1, &spec(1, &[(1, 1); 4]), &w(&[2])), Some(vec![1]));
        let a2 = alg(Family::A, 2);
        assert_eq!(total_m(&a2, &spec(2, &[(1, 1)]), &w(&[0, 1])), None);
        // above the top weight: negative entries
        assert_eq!(total_m(&a1, &spec(1, &[(1, 1)]), &w(&[3])), None);
    }

    #[test]
    fn enumeration_order_and_counts() {
        let two: Vec<_> = enumerate_mconfigs(&[2]).collect();
        assert_eq!(two, vec![MConfig::from_triples(1, [(0, 2, 1)]), MConfig::from_triples(1, [(0, 1, 2)])]);
        let empty: Vec<_> = enumerate_mconfigs(&[0, 0]).collect();
        assert_eq!(empty, vec![MConfig::empty(2)]);
        assert_eq!(enumerate_mconfigs(&[3]).count(), 3);
        let it = enumerate_mconfigs(&[4, 5, 0]);
        assert_eq!(it.total(), 5 * 7);
        assert_eq!(it.count(), 35);
        for mc in enumerate_mconfigs(&[4, 3]) {
            assert_eq!(mc.node_total(0), 4);
            assert_eq!(mc.node_total(1), 3);
        }
    }

    #[test]
    fn vacancy_examples() {
        let a1 = alg(Family::A, 1);
        let v = vacancy_numbers(&a1, &spec(1, &[(1, 1), (1, 1)]), &MConfig::from_triples(1, [(0, 1, 1)]));
        assert_eq!(v.get(&(0, 1)), Some(&0));
        let v = vacancy_numbers(&a1, &spec(1, &[(1, 1); 4]), &MConfig::from_triples(1, [(0, 2, 1)]));
        assert_eq!(v.get(&(0, 2)), Some(&0));
        assert_eq!(v.get(&(0, 1)), Some(&2));
        let d4 = alg(Family::D, 4);
        let v = vacancy_numbers(&d4, &spec(4, &[(3, 2)]), &MConfig::empty(4));
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(&(1, 3)), Some(&3));
    }

    #[test]
    fn quadratic_examples() {
        let a1 = alg(Family::A, 1);
        assert_eq!(quadratic_exponent(&a1, &spec(1, &[(1, 1), (1, 1)]), &MConfig::empty(1)), 0);
        assert_eq!(quadratic_exponent(&a1, &spec(1, &[(1, 1), (1, 1)]), &MConfig::from_triples(1, [(0, 1, 1)])), -1);
        assert_eq!(quadratic_exponent(&a1, &spec(1, &[(1, 1); 4]), &MConfig::from_triples(1, [(0, 2, 1)])), -2);
    }

    #[test]
    fn pinned_a1_polynomials() {
        let a1 = alg(Family::A, 1);
        let two = spec(1, &[(1, 1); 2]);
        let four = spec(1, &[(1, 1); 4]);
        assert_eq!(kr1_polynomial(&a1, &two, &w(&[0])), poly(&[(1, 1)]));
        assert_eq!(kr1_polynomial(&a1, &two, &w(&[2])), LaurentPoly::one());
        assert_eq!(kr1_polynomial(&a1, &four, &w(&[0])), poly(&[(2, 1), (4, 1)]));
        assert_eq!(kr1_polynomial(&a1, &four, &w(&[2])), poly(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(fermionic_sum(&a1, &two, &w(&[0]), Positivity::Occupied), poly(&[(-1, 1)]));
    }

    #[test]
    fn zero_weight_gate() {
        let a2 = alg(Family::A, 2);
        let r = spec(2, &[(1, 1)]);
        assert!(kr1_polynomial(&a2, &r, &w(&[0, 1])).is_zero());
        assert!(kr2_value(&a2, &r, &w(&[0, 1])).is_zero());
        assert_eq!(
            fermionic_polynomial(&a2, &r, &w(&[0, 1]), Variant::Kr2AtOne),
            FermionicValue::AtOne(BigInt::zero())
        );
    }

    #[test]
    fn b2_spin_node_uses_asymmetric_coupling() {
        // V(ω2) ⊗ V(ω2) = V(2ω2) ⊕ V(ω1) ⊕ V(0) for B2
        let b2 = alg(Family::B, 2);
        let r = spec(2, &[(1, 2), (1, 2)]);
        for (lam, expect) in [([0, 0], 1), ([1, 0], 1), ([0, 2], 1)] {
            assert_eq!(kr1_count(&b2, &r, &w(&lam)), BigInt::from(expect), "λ = {lam:?}");
        }
    }

    #[test]
    fn support_examples() {
        let a1 = alg(Family::A, 1);
        assert_eq!(support_weights(&a1, &spec(1, &[(1, 1); 2])), vec![w(&[0]), w(&[2])]);
        assert_eq!(support_weights(&a1, &spec(1, &[(1, 1); 3])), vec![w(&[1]), w(&[3])]);
        let a2 = alg(Family::A, 2);
        assert_eq!(support_weights(&a2, &spec(2, &[(1, 1), (1, 1)])), vec![w(&[2, 0]), w(&[0, 1])]);
    }

    #[test]
    fn dimension_examples() {
        let a1 = alg(Family::A, 1);
        assert_eq!(fermionic_dimension(&a1, &spec(1, &[(1, 1)])), BigInt::from(2));
        assert_eq!(fermionic_dimension(&a1, &spec(1, &[(1, 1); 2])), BigInt::from(4));
        let a2 = alg(Family::A, 2);
        assert_eq!(fermionic_dimension(&a2, &spec(2, &[(1, 1), (1, 2)])), BigInt::from(9));
    }

    #[test]
    fn spec_rejects_bad_entries() {
        assert_eq!(
            KRWeightSpec::new(3, [KrFactor { node: 8, level: 1 }]),
            Err(Error::NodeOutOfRange { node: 9, rank: 3 })
        );
        assert_eq!(KRWeightSpec::new(3, [KrFactor { node: 0, level: 0 }]), Err(Error::ZeroLevel));
        assert!(DominantWeight::new(vec![1, -1]).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(spec(3, &[(1, 3), (2, 1)]).to_string(), "2*w1,1*w3");
        assert_eq!(w(&[0, 0]).to_string(), "0");
        assert_eq!(w(&[2, 0, 1]).to_string(), "2*w1+1*w3");
    }
}
