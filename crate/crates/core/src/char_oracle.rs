//! Weyl character ring: dimensions, weight multiplicities, tensor product
//! decompositions and KR-module characters.
//!
//! This is the independent side of the q = 1 comparison. Weight
//! multiplicities come from Freudenthal's recursion, tensor products from
//! Klimyk's rule. KR characters are the one input borrowed from the
//! fermionic side: the multiplicities of a single KR module are read off the
//! `N = 1` fermionic sum.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::fermionic::{kr1_count, support_weights, DominantWeight, KRWeightSpec, KrFactor};
use crate::lie::{AlgebraData, Weight};

/// `dim V_λ = ∏_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(alg: &AlgebraData, lam: &DominantWeight) -> BigInt {
    let shifted: Weight = lam.coords().iter().zip(alg.rho()).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in alg.positive_roots() {
        num *= alg.pair_with_root(&shifted, root);
        den *= alg.pair_with_root(alg.rho(), root);
    }
    let (q, r) = (&num / &den, &num % &den);
    assert!(r.is_zero(), "Weyl dimension formula must give an integer");
    q
}

/// All weights of one irreducible module with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    highest: DominantWeight,
    entries: BTreeMap<Weight, BigInt>,
}

impl WeightTable {
    pub fn highest(&self) -> &DominantWeight {
        &self.highest
    }

    pub fn multiplicity(&self, w: &[i64]) -> BigInt {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn dimension(&self) -> BigInt {
        self.entries.values().sum()
    }
}

/// Multiplicities of the dominant weights of `V_λ` by Freudenthal's formula
/// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) m(μ+kα)`.
pub fn dominant_multiplicities(alg: &AlgebraData, lam: &DominantWeight) -> BTreeMap<Weight, BigInt> {
    let top = lam.coords();
    let rho = alg.rho();
    let det = alg.cartan_det();
    let plus_rho = |w: &[i64]| -> Weight { w.iter().zip(rho).map(|(a, b)| a + b).collect() };
    let top_rho = plus_rho(top);
    let top_norm = alg.scaled_inner_product(&top_rho, &top_rho);

    // dominant weights ordered by depth below λ
    let mut layers: Vec<(i64, Weight, Vec<i64>)> = alg
        .dominant_weights_below(top)
        .into_iter()
        .map(|mu| {
            let diff: Weight = top.iter().zip(&mu).map(|(a, b)| a - b).collect();
            let depth = alg.to_root_coords(&diff).expect("dominant weights below λ differ by roots");
            (depth.iter().sum::<i64>(), mu, depth)
        })
        .collect();
    layers.sort();

    let mut mult: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (height, mu, depth) in layers {
        if height == 0 {
            mult.insert(mu, BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for (root, root_w) in alg.positive_roots().iter().zip(alg.positive_root_weights()) {
            let mut shifted = mu.clone();
            let mut remaining = depth.clone();
            loop {
                for (x, y) in shifted.iter_mut().zip(root_w) {
                    *x += y;
                }
                for (x, y) in remaining.iter_mut().zip(root) {
                    *x -= y;
                }
                if remaining.iter().any(|&x| x < 0) {
                    break;
                }
                let (rep, _) = alg.reflect_to_dominant(&shifted);
                if let Some(m) = mult.get(&rep) {
                    acc += m * alg.pair_with_root(&shifted, root);
                }
            }
        }
        let mu_rho = plus_rho(&mu);
        let gap = top_norm - alg.scaled_inner_product(&mu_rho, &mu_rho);
        assert!(gap > 0, "Freudenthal denominator vanishes only at the highest weight");
        let num = acc * 2 * det;
        let (q, r): (BigInt, BigInt) = (&num / gap, &num % gap);
        assert!(r.is_zero(), "Freudenthal recursion must give integral multiplicities");
        if !q.is_zero() {
            mult.insert(mu, q);
        }
    }
    mult
}

/// The full weight system of `V_λ`.
pub fn weight_multiplicities(alg: &AlgebraData, lam: &DominantWeight) -> WeightTable {
    let mut entries = BTreeMap::new();
    for (mu, m) in dominant_multiplicities(alg, lam) {
        for w in alg.orbit(&mu) {
            entries.insert(w, m.clone());
        }
    }
    WeightTable { highest: lam.clone(), entries }
}

/// A finite-dimensional module up to isomorphism: `⊕ V_λ^{⊕ c_λ}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterDecomp {
    terms: BTreeMap<DominantWeight, BigInt>,
}

impl CharacterDecomp {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn irreducible(lam: DominantWeight) -> Self {
        let mut c = Self::new();
        c.add(lam, BigInt::one());
        c
    }

    /// The trivial module `V_0`.
    pub fn unit(rank: usize) -> Self {
        Self::irreducible(DominantWeight::zero(rank))
    }

    pub fn add(&mut self, lam: DominantWeight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lam.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn multiplicity(&self, lam: &DominantWeight) -> BigInt {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DominantWeight, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c_λ dim V_λ`.
    pub fn dimension(&self, alg: &AlgebraData) -> BigInt {
        self.terms.iter().map(|(lam, c)| c * weyl_dimension(alg, lam)).sum()
    }
}

/// Memo of weight tables keyed by highest weight, for one algebra.
#[derive(Debug, Default)]
pub struct WeightCache {
    tables: BTreeMap<DominantWeight, WeightTable>,
}

impl WeightCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, alg: &AlgebraData, lam: &DominantWeight) -> &WeightTable {
        self.tables.entry(lam.clone()).or_insert_with(|| weight_multiplicities(alg, lam))
    }
}

/// Tensor product decomposition by Klimyk's rule: every weight `ν` of one
/// factor moves `λ + ν + ρ` of the other into the dominant chamber, with the
/// sign of the Weyl element; weights landing on a wall drop out.
pub fn tensor_decompose(alg: &AlgebraData, a: &CharacterDecomp, b: &CharacterDecomp) -> CharacterDecomp {
    tensor_decompose_cached(alg, a, b, &mut WeightCache::new())
}

pub fn tensor_decompose_cached(
    alg: &AlgebraData,
    a: &CharacterDecomp,
    b: &CharacterDecomp,
    cache: &mut WeightCache,
) -> CharacterDecomp {
    // expand the factor with fewer weights
    let (outer, inner) = if a.dimension(alg) <= b.dimension(alg) { (b, a) } else { (a, b) };
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (mu, cm) in inner.terms() {
        let table = cache.get(alg, mu);
        for (lam, cl) in outer.terms() {
            let coeff = cl * cm;
            for (nu, mult) in table.iter() {
                let v: Weight = lam.coords().iter().zip(nu).zip(alg.rho()).map(|((x, y), z)| x + y + z).collect();
                let (dom, steps) = alg.reflect_to_dominant(&v);
                if dom.contains(&0) {
                    continue;
                }
                let target: Weight = dom.iter().map(|x| x - 1).collect();
                let term = &coeff * mult;
                let slot = acc.entry(target).or_default();
                if steps % 2 == 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
        }
    }
    let mut out = CharacterDecomp::new();
    for (w, c) in acc {
        assert!(!c.is_negative(), "tensor product multiplicities are nonnegative");
        out.add(DominantWeight::new(w).expect("Klimyk targets are dominant"), c);
    }
    out
}

/// Character of the KR module with label `level · ω_node`, read from the
/// `N = 1` fermionic sum at `q = 1`.
pub fn kr_character(alg: &AlgebraData, level: u32, node: usize) -> CharacterDecomp {
    let r = KRWeightSpec::single(alg.rank(), KrFactor { node, level }).expect("valid KR label");
    let mut out = CharacterDecomp::new();
    for lam in support_weights(alg, &r) {
        let c = kr1_count(alg, &r, &lam);
        out.add(lam, c);
    }
    out
}

/// `⊗_p KR_{a_p ω_{i_p}}` decomposed into irreducibles.
pub fn oracle_decomposition(alg: &AlgebraData, r: &KRWeightSpec) -> CharacterDecomp {
    let mut cache = WeightCache::new();
    let mut kr: BTreeMap<KrFactor, CharacterDecomp> = BTreeMap::new();
    let mut acc = CharacterDecomp::unit(alg.rank());
    for f in r.entries() {
        let ch = kr.entry(f).or_insert_with(|| kr_character(alg, f.level, f.node));
        acc = tensor_decompose_cached(alg, &acc, ch, &mut cache);
    }
    acc
}

/// Multiplicity of `V_λ` in the tensor product of the KR modules in `R`.
pub fn oracle_multiplicity(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight) -> BigInt {
    oracle_decomposition(alg, r).multiplicity(lam)
}
