//! Root-system data for the simple Lie algebras of types A through G.
//!
//! Simple roots are numbered following Bourbaki, except for `G2` where
//! node 1 carries the long root (see the README for the Dynkin diagrams).
//! Root lengths are normalized so that short simple roots satisfy
//! `(α, α) = 2`; the symmetrizers `d_i = (α_i, α_i) / 2` are then integers.
//!
//! Two coordinate systems are used throughout the crate:
//!
//! * weights live in the fundamental-weight basis (`λ = Σ l_i ω_i`);
//! * roots live in the simple-root basis (`β = Σ k_i α_i`).
//!
//! With `C_ij = 2(α_i, α_j) / (α_i, α_i)` the two are related by
//! `weight = C · root`, so `root = C⁻¹ · weight`.

#![allow(clippy::needless_range_loop)]

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::error::Error;

/// Weight in fundamental-weight coordinates (entries may be negative).
pub type Weight = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Exceptional families have no classical matrix realization.
    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::E | Family::F | Family::G)
    }
}

/// A Cartan type `X_r`. Construction checks that the rank is admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraType {
    family: Family,
    rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(AlgebraType { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Immutable root-system data for one simple Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    ty: AlgebraType,
    /// Row-major `r × r` Cartan matrix.
    cartan: Vec<i64>,
    /// `det C · C⁻¹`, row-major (the adjugate of `C`).
    inv_numer: Vec<i64>,
    det: i64,
    symmetrizers: Vec<i64>,
    /// Positive roots in simple-root coordinates, sorted by height.
    positive_roots: Vec<Vec<i64>>,
    /// Positive roots in fundamental-weight coordinates, same order.
    positive_root_weights: Vec<Weight>,
    rho: Weight,
}

/// Gram matrix `(α_i, α_j)` in the short-roots-have-length-2 normalization.
fn gram_matrix(ty: AlgebraType) -> Vec<Vec<i64>> {
    let r = ty.rank;
    let mut g = vec![vec![0i64; r]; r];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match ty.family {
        Family::A => {
            for i in 0..r {
                g[i][i] = 2;
            }
            for i in 0..r - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            // α_1 … α_{r-1} long, α_r short
            for i in 0..r - 1 {
                g[i][i] = 4;
            }
            g[r - 1][r - 1] = 2;
            for i in 0..r - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            // α_1 … α_{r-1} short, α_r long
            for i in 0..r - 1 {
                g[i][i] = 2;
            }
            g[r - 1][r - 1] = 4;
            for i in 0..r - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, r - 2, r - 1, -2);
        }
        Family::D => {
            for i in 0..r {
                g[i][i] = 2;
            }
            for i in 0..r - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, r - 3, r - 1, -1);
        }
        Family::E => {
            for i in 0..r {
                g[i][i] = 2;
            }
            // 1-3-4-5-…-r with 2 attached to 4
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..r - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 6;
            g[1][1] = 2;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Exact inverse of an integer matrix by Gauss-Jordan elimination over ℚ.
/// Returns `(det, adjugate)` with `adjugate = det · M⁻¹`.
fn invert_exact(m: &[i64], r: usize) -> (i64, Vec<i64>) {
    let mut a: Vec<Vec<Ratio<i64>>> = (0..r)
        .map(|i| {
            let mut row: Vec<Ratio<i64>> = (0..r).map(|j| Ratio::from_integer(m[i * r + j])).collect();
            row.extend((0..r).map(|j| Ratio::from_integer(i64::from(i == j))));
            row
        })
        .collect();
    let mut det = Ratio::from_integer(1i64);
    for col in 0..r {
        let pivot = (col..r).find(|&i| a[i][col] != Ratio::from_integer(0)).expect("Cartan matrices are nonsingular");
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for i in 0..r {
            if i != col && a[i][col] != Ratio::from_integer(0) {
                let f = a[i][col];
                for j in 0..2 * r {
                    let delta = f * a[col][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    assert!(det.is_integer());
    let det = det.to_integer();
    let mut adj = Vec::with_capacity(r * r);
    for row in &a {
        for x in &row[r..] {
            let v = *x * Ratio::from_integer(det);
            assert!(v.is_integer(), "adjugate must be integral");
            adj.push(v.to_integer());
        }
    }
    (det, adj)
}

/// Builds the root-system data for `ty`.
pub fn build_algebra(ty: AlgebraType) -> AlgebraData {
    let r = ty.rank;
    let gram = gram_matrix(ty);
    let mut cartan = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let num = 2 * gram[i][j];
            debug_assert_eq!(num % gram[i][i], 0);
            cartan.push(num / gram[i][i]);
        }
    }
    let symmetrizers: Vec<i64> = (0..r).map(|i| gram[i][i] / 2).collect();
    let (det, inv_numer) = invert_exact(&cartan, r);
    let positive_roots = reflection_closure(&cartan, r);
    let positive_root_weights = positive_roots
        .iter()
        .map(|k| (0..r).map(|i| (0..r).map(|j| cartan[i * r + j] * k[j]).sum()).collect())
        .collect();
    AlgebraData { ty, cartan, inv_numer, det, symmetrizers, positive_roots, positive_root_weights, rho: vec![1; r] }
}

/// Generates the positive roots from the simple roots by applying simple
/// reflections until no new positive root appears.
fn reflection_closure(cartan: &[i64], r: usize) -> Vec<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            // ⟨β, α_i^∨⟩ = (C β)_i
            let pairing: i64 = (0..r).map(|j| cartan[i * r + j] * beta[j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().all(|&x| x >= 0) && image.iter().any(|&x| x > 0) && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

/// Number of positive roots of `ty`.
pub fn positive_root_count(ty: AlgebraType) -> usize {
    build_algebra(ty).positive_roots.len()
}

impl AlgebraData {
    pub fn algebra_type(&self) -> AlgebraType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `C_ij` with 0-based node indices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank() + j]
    }

    /// `C⁻¹_ij` as an exact rational.
    pub fn inv_cartan(&self, i: usize, j: usize) -> Ratio<i64> {
        Ratio::new(self.inv_numer[i * self.rank() + j], self.det)
    }

    /// `det C`, the common denominator of `C⁻¹`.
    pub fn cartan_det(&self) -> i64 {
        self.det
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_root_weights
    }

    /// The Weyl vector: all ones in fundamental-weight coordinates.
    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// `α_i` (0-based) in fundamental-weight coordinates: column `i` of `C`.
    pub fn simple_root(&self, i: usize) -> Weight {
        (0..self.rank()).map(|k| self.cartan(k, i)).collect()
    }

    /// `C⁻¹ · v` when every entry is an integer, `None` otherwise.
    pub fn to_root_coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let r = self.rank();
        let mut out = Vec::with_capacity(r);
        for i in 0..r {
            let num: i64 = (0..r).map(|j| self.inv_numer[i * r + j] * v[j]).sum();
            if num % self.det != 0 {
                return None;
            }
            out.push(num / self.det);
        }
        Some(out)
    }

    /// `det C · (v, w)`, an integer for weights in fundamental coordinates.
    pub fn scaled_inner_product(&self, v: &[i64], w: &[i64]) -> i64 {
        let r = self.rank();
        let mut acc = 0i64;
        for i in 0..r {
            if v[i] == 0 {
                continue;
            }
            let row: i64 = (0..r).map(|j| self.inv_numer[i * r + j] * w[j]).sum();
            acc += v[i] * row * self.symmetrizers[i];
        }
        acc
    }

    /// The invariant form `(v, w)` on weights given in fundamental coordinates,
    /// normalized so that short roots have squared length 2.
    pub fn inner_product(&self, v: &[i64], w: &[i64]) -> Result<Ratio<i64>, Error> {
        let r = self.rank();
        if v.len() != r || w.len() != r {
            return Err(Error::DimensionMismatch { expected: r, found: if v.len() != r { v.len() } else { w.len() } });
        }
        Ok(Ratio::new(self.scaled_inner_product(v, w), self.det))
    }

    /// `(v, β)` for a weight `v` and a root `β` in simple-root coordinates.
    /// Always an integer.
    pub fn pair_with_root(&self, v: &[i64], root: &[i64]) -> i64 {
        // (ω_i, α_k) = δ_ik d_k
        v.iter().zip(root).zip(&self.symmetrizers).map(|((x, k), d)| x * k * d).sum()
    }

    /// Applies simple reflections until every coordinate is nonnegative.
    /// Returns the dominant representative and the number of reflections used.
    pub fn reflect_to_dominant(&self, v: &[i64]) -> (Weight, usize) {
        let mut w = v.to_vec();
        let mut steps = 0;
        while let Some(i) = w.iter().position(|&x| x < 0) {
            self.reflect(&mut w, i);
            steps += 1;
        }
        (w, steps)
    }

    /// `s_i` acting in place on a weight in fundamental coordinates.
    pub fn reflect(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c == 0 {
            return;
        }
        for (k, x) in w.iter_mut().enumerate() {
            *x -= c * self.cartan(k, i);
        }
    }

    /// The Weyl orbit of a dominant weight.
    pub fn orbit(&self, dominant: &[i64]) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(dominant.to_vec());
        queue.push_back(dominant.to_vec());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w[i] > 0 {
                    let mut image = w.clone();
                    self.reflect(&mut image, i);
                    if seen.insert(image.clone()) {
                        queue.push_back(image);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// All dominant weights `μ` with `top − μ` a nonnegative integer
    /// combination of simple roots. Reached by subtracting positive roots
    /// from dominant weights, which connects every dominant weight below
    /// `top`. Sorted colexicographically (last coordinate most significant).
    pub fn dominant_weights_below(&self, top: &[i64]) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(top.to_vec());
        queue.push_back(top.to_vec());
        while let Some(w) = queue.pop_front() {
            for root in &self.positive_root_weights {
                let next: Weight = w.iter().zip(root).map(|(a, b)| a - b).collect();
                if next.iter().all(|&x| x >= 0) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort_by(|a, b| colex_cmp(a, b));
        out
    }
}

/// Compares weights with the last coordinate most significant.
pub fn colex_cmp(a: &[i64], b: &[i64]) -> core::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}
