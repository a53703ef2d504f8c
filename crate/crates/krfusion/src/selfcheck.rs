//! Invariant suite behind `krfusion selfcheck`.

use krfusion_core::{
    build_algebra, gamma_binomial, kr1_count, kr1_polynomial, kr1_polynomial_with, kr2_value, positive_root_count,
    q_binomial, support_weights, tensor_decompose, weight_multiplicities, weyl_dimension, AlgebraData, AlgebraType,
    CharacterDecomp, DominantWeight, Family, KRWeightSpec, KrFactor, LaurentPoly, Positivity,
};
use num_bigint::BigInt;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::render::{SelfcheckDoc, SelfcheckRow, Status};

/// Largest irreducible expanded by the character checks.
const MAX_CHECK_DIMENSION: u32 = 5000;
const MAX_BINOMIAL_N: i64 = 12;

type Outcome = Result<String, String>;

enum Task {
    Binomials,
    Lie(AlgebraType),
    Characters(AlgebraType),
    Fermionic(AlgebraType, KRWeightSpec),
}

fn default_algebras() -> Vec<AlgebraType> {
    use Family::*;
    [(A, 1), (A, 2), (A, 3), (B, 2), (B, 3), (C, 2), (C, 3), (D, 4), (G, 2), (F, 4)]
        .into_iter()
        .map(|(f, r)| AlgebraType::new(f, r).expect("valid default"))
        .collect()
}

fn default_specs(ty: AlgebraType) -> Vec<KRWeightSpec> {
    let rank = ty.rank();
    let spec = |fs: &[(usize, u32)]| {
        KRWeightSpec::new(rank, fs.iter().map(|&(node, level)| KrFactor { node, level })).expect("valid default")
    };
    let mut out: Vec<KRWeightSpec> = (0..rank).map(|i| spec(&[(i, 1)])).collect();
    out.push(spec(&[(0, 2)]));
    out.push(spec(&[(0, 1), (0, 1)]));
    if rank > 1 {
        out.push(spec(&[(0, 1), (rank - 1, 1)]));
    }
    out
}

fn tasks(algebra: Option<AlgebraType>, weights: Option<&KRWeightSpec>) -> Vec<Task> {
    let algebras = algebra.map_or_else(default_algebras, |a| vec![a]);
    let mut out = vec![Task::Binomials];
    for &ty in &algebras {
        out.push(Task::Lie(ty));
        out.push(Task::Characters(ty));
        let specs = match weights {
            Some(w) => vec![w.clone()],
            None => default_specs(ty),
        };
        out.extend(specs.into_iter().map(|r| Task::Fermionic(ty, r)));
    }
    out
}

fn fail(what: String) -> Outcome {
    Err(what)
}

fn binomials() -> Outcome {
    let mut count = 0;
    for n in 0..=MAX_BINOMIAL_N {
        for m in 0..=n {
            let b = q_binomial(n, m);
            if b != q_binomial(n, n - m) {
                return fail(format!("symmetry fails at ({n}, {m})"));
            }
            if n > 0 && b != &q_binomial(n - 1, m - 1) + &q_binomial(n - 1, m).shift(m) {
                return fail(format!("Pascal recurrence fails at ({n}, {m})"));
            }
            if b.min_exponent() != Some(0) || b.max_exponent() != Some(m * (n - m)) {
                return fail(format!("degree wrong at ({n}, {m})"));
            }
            if b.eval_at_one() != gamma_binomial(n, m) {
                return fail(format!("value at q=1 wrong at ({n}, {m})"));
            }
            let (_, c) = b.to_dense();
            let rising = c.windows(2).take_while(|w| w[0] <= w[1]).count();
            if c[rising..].windows(2).any(|w| w[0] < w[1]) {
                return fail(format!("not unimodal at ({n}, {m})"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} binomials"))
}

fn expected_root_count(ty: AlgebraType) -> usize {
    let r = ty.rank();
    match (ty.family(), r) {
        (Family::A, _) => r * (r + 1) / 2,
        (Family::B | Family::C, _) => r * r,
        (Family::D, _) => r * (r - 1),
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, _) => 120,
        (Family::F, _) => 24,
        (Family::G, _) => 6,
    }
}

fn lie(alg: &AlgebraData) -> Outcome {
    let ty = alg.algebra_type();
    let r = alg.rank();
    for i in 0..r {
        for j in 0..r {
            let entry = (0..r).fold(Ratio::from_integer(0), |acc, k| acc + alg.inv_cartan(i, k) * alg.cartan(k, j));
            if entry != Ratio::from_integer(i64::from(i == j)) {
                return fail(format!("C^-1 C differs from the identity at ({}, {})", i + 1, j + 1));
            }
            let d = alg.symmetrizers();
            if d[i] * alg.cartan(i, j) != d[j] * alg.cartan(j, i) {
                return fail(format!("D C is not symmetric at ({}, {})", i + 1, j + 1));
            }
        }
    }
    let n = positive_root_count(ty);
    if n != expected_root_count(ty) {
        return fail(format!("{n} positive roots"));
    }
    Ok(format!("{n} positive roots"))
}

fn characters(alg: &AlgebraData) -> Outcome {
    let r = alg.rank();
    let mut small = vec![DominantWeight::zero(r)];
    for i in 0..r {
        let mut w = vec![0; r];
        w[i] = 1;
        let w = DominantWeight::new(w).expect("fundamental weight");
        if weyl_dimension(alg, &w) <= BigInt::from(MAX_CHECK_DIMENSION) {
            small.push(w);
        }
    }
    for w in &small {
        if weight_multiplicities(alg, w).dimension() != weyl_dimension(alg, w) {
            return fail(format!("weight multiplicities of {w} do not sum to the Weyl dimension"));
        }
    }
    let mut products = 0;
    for (k, a) in small.iter().enumerate() {
        for b in &small[k..] {
            let (x, y) = (CharacterDecomp::irreducible(a.clone()), CharacterDecomp::irreducible(b.clone()));
            let dx = x.dimension(alg);
            let dy = y.dimension(alg);
            if &dx * &dy > BigInt::from(MAX_CHECK_DIMENSION) {
                continue;
            }
            let prod = tensor_decompose(alg, &x, &y);
            if prod.dimension(alg) != dx * dy || prod != tensor_decompose(alg, &y, &x) {
                return fail(format!("tensor product {a} x {b} is inconsistent"));
            }
            products += 1;
        }
    }
    Ok(format!("{} highest weights, {products} tensor products", small.len()))
}

fn fermionic(alg: &AlgebraData, r: &KRWeightSpec) -> Outcome {
    let top = DominantWeight::new(r.total_weight()).expect("sum of dominant weights");
    if kr1_polynomial(alg, r, &top) != LaurentPoly::one() {
        return fail("top weight multiplicity is not 1".into());
    }
    let mut above = r.total_weight();
    above[0] += 1;
    let above = DominantWeight::new(above).expect("dominant");
    if !kr1_polynomial(alg, r, &above).is_zero() || kr2_value(alg, r, &above) != BigInt::from(0) {
        return fail(format!("nonzero multiplicity above the top weight at {above}"));
    }
    let support = support_weights(alg, r);
    for lam in &support {
        let m = kr1_polynomial(alg, r, lam);
        if !m.has_nonnegative_coefficients() {
            return fail(format!("negative coefficient at {lam}: {m}"));
        }
        if kr1_polynomial_with(alg, r, lam, Positivity::Off) != m {
            return fail(format!("positivity filter is not redundant at {lam}"));
        }
        if kr1_count(alg, r, lam) != m.eval_at_one() {
            return fail(format!("integer count differs from M(1) at {lam}"));
        }
    }
    Ok(format!("{} weights", support.len()))
}

/// Runs the suite for one algebra (and optionally one `R`), or for a fixed
/// list of small algebras when none is given.
pub fn run(algebra: Option<AlgebraType>, weights: Option<&KRWeightSpec>) -> SelfcheckDoc {
    let checks: Vec<SelfcheckRow> = tasks(algebra, weights)
        .par_iter()
        .map(|task| {
            let (name, check, outcome) = match task {
                Task::Binomials => ("-".to_string(), "q-binomial identities".to_string(), binomials()),
                Task::Lie(ty) => (ty.to_string(), "root system data".to_string(), lie(&build_algebra(*ty))),
                Task::Characters(ty) => {
                    (ty.to_string(), "Weyl, Freudenthal and Klimyk".to_string(), characters(&build_algebra(*ty)))
                }
                Task::Fermionic(ty, r) => {
                    (ty.to_string(), format!("fermionic sums for R={r}"), fermionic(&build_algebra(*ty), r))
                }
            };
            let (status, detail) = match outcome {
                Ok(d) => (Status::Pass, d),
                Err(d) => (Status::Fail, d),
            };
            SelfcheckRow { algebra: name, check, status, detail }
        })
        .collect();
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    SelfcheckDoc { passed: checks.len() - failed, failed, checks, elapsed_ms: None }
}
