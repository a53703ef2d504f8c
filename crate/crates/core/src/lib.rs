//! Exact evaluation of fermionic multiplicity formulas for fusion products
//! of Kirillov-Reshetikhin modules over the simple Lie algebras, together
//! with two independent oracles used to check them: the Weyl character
//! ring (all types, at `q = 1`) and Kostka–Foulkes polynomials through the
//! charge statistic (type `A`, graded).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod char_oracle;
pub mod error;
pub mod fermionic;
pub mod kostka;
pub mod lie;
pub mod qpoly;

pub use char_oracle::{
    kr_character, oracle_decomposition, oracle_multiplicity, tensor_decompose, weight_multiplicities, weyl_dimension,
    CharacterDecomp, WeightTable,
};
pub use error::Error;
pub use fermionic::{
    enumerate_mconfigs, fermionic_dimension, fermionic_polynomial, fermionic_sum, kr1_count, kr1_polynomial,
    kr1_polynomial_with, kr2_value, quadratic_exponent, support_weights, total_m, vacancy_numbers, DominantWeight,
    FermionicValue, KRWeightSpec, KrFactor, MConfig, Positivity, Variant,
};
pub use kostka::{charge, enumerate_ssyt, fermionic_vs_kostka, kostka_polynomial, Partition, Tableau};
pub use lie::{build_algebra, positive_root_count, AlgebraData, AlgebraType, Family, Weight};
pub use qpoly::{gamma_binomial, q_binomial, LaurentPoly};
