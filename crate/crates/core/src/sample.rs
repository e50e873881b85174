//! Seeded random elements for the property suites and the CLI's randomized
//! checks. Everything is driven by an explicit seed, so runs reproduce
//! byte-for-byte.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebroid::LieAlgebroid;
use crate::coeff::{Coeff, Poly, Rational};
use crate::exterior::{masks_of_degree, Exterior, Form, Multivector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-3..=3);
    let den: i64 = rng.gen_range(1..=2);
    Rational::new(num.into(), den.into())
}

/// Random polynomial coefficient: at most three monomials of total degree
/// at most two, small rational coefficients. May be zero.
pub fn random_coeff(nvars: usize, rng: &mut ChaCha8Rng) -> Coeff {
    let mut p = Poly::zero(nvars);
    let terms = rng.gen_range(0..=2);
    for _ in 0..=terms {
        let mut exps = vec![0u32; nvars];
        let mut budget = 2;
        for e in exps.iter_mut() {
            let d = rng.gen_range(0..=budget);
            *e = d;
            budget -= d;
        }
        let c = small_rational(rng);
        p = &p + &Poly::from_terms(nvars, [(crate::coeff::Monomial(exps), c)]);
    }
    Coeff::Poly(p)
}

fn random_graded<K>(n: usize, nvars: usize, degree: usize, rng: &mut ChaCha8Rng) -> Exterior<K> {
    let mut out = Exterior::zero(n, nvars);
    for mask in masks_of_degree(n, degree) {
        if rng.gen_bool(0.6) {
            let c = random_coeff(nvars, rng);
            out = out.add(&Exterior::from_terms(n, nvars, [(mask, c)]));
        }
    }
    out
}

/// Random homogeneous multivector of the given degree.
pub fn random_multivector_of_degree(
    e: &LieAlgebroid,
    degree: usize,
    rng: &mut ChaCha8Rng,
) -> Multivector {
    random_graded(e.rank(), e.base_dim(), degree, rng)
}

/// Random homogeneous form of the given degree.
pub fn random_form_of_degree(e: &LieAlgebroid, degree: usize, rng: &mut ChaCha8Rng) -> Form {
    random_graded(e.rank(), e.base_dim(), degree, rng)
}

/// Random homogeneous multivector of random degree (possibly zero).
pub fn random_homogeneous(e: &LieAlgebroid, rng: &mut ChaCha8Rng) -> Multivector {
    let k = rng.gen_range(0..=e.rank());
    random_multivector_of_degree(e, k, rng)
}

/// Random form with terms in every degree.
pub fn random_form(e: &LieAlgebroid, rng: &mut ChaCha8Rng) -> Form {
    let mut out = Form::zero(e.rank(), e.base_dim());
    for k in 0..=e.rank() {
        out = out.add(&random_form_of_degree(e, k, rng));
    }
    out
}

/// Random multivector with terms in every degree.
pub fn random_multivector(e: &LieAlgebroid, rng: &mut ChaCha8Rng) -> Multivector {
    let mut out = Multivector::zero(e.rank(), e.base_dim());
    for k in 0..=e.rank() {
        out = out.add(&random_multivector_of_degree(e, k, rng));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let e = crate::corpus::tangent_plane();
        let a = random_multivector(&e, &mut rng(42));
        let b = random_multivector(&e, &mut rng(42));
        assert_eq!(a, b);
    }

    #[test]
    fn homogeneous_samples_are_homogeneous() {
        let e = crate::corpus::sl2();
        let mut r = rng(7);
        for _ in 0..20 {
            let k = 2;
            let a = random_multivector_of_degree(&e, k, &mut r);
            assert!(a.is_zero() || a.degree() == Some(k));
        }
    }
}
