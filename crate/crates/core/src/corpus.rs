//! Built-in algebroids used across the test suites and shipped as JSON
//! definition files.

use std::collections::BTreeMap;

use crate::algebroid::{default_coframe_names, default_frame_names, LieAlgebroid};
use crate::coeff::{Coeff, Rational};

/// Lie algebra (zero-dimensional base) from constant structure data:
/// `brackets[((i,j), k)] = c^k_{ij}` for 0-based `i < j`.
pub fn lie_algebra(n: usize, brackets: &[((usize, usize), &[(usize, i64)])]) -> LieAlgebroid {
    lie_algebra_rational(
        n,
        &brackets
            .iter()
            .map(|(ij, entries)| {
                (
                    *ij,
                    entries
                        .iter()
                        .map(|(k, v)| (*k, Rational::from_integer((*v).into())))
                        .collect::<Vec<_>>(),
                )
            })
            .collect::<Vec<_>>(),
    )
}

pub fn lie_algebra_rational(
    n: usize,
    brackets: &[((usize, usize), Vec<(usize, Rational)>)],
) -> LieAlgebroid {
    let mut map = BTreeMap::new();
    for ((i, j), entries) in brackets {
        let mut comps = vec![Coeff::zero(0); n];
        for (k, v) in entries {
            comps[*k] = Coeff::constant(0, v.clone());
        }
        map.insert((*i, *j), comps);
    }
    LieAlgebroid::new(
        vec![],
        default_frame_names(n),
        default_coframe_names(n),
        vec![vec![]; n],
        map,
    )
    .expect("well-formed structure data")
}

/// The affine algebra of the line: `[X_1, X_2] = X_2`.
pub fn aff1() -> LieAlgebroid {
    lie_algebra(2, &[((0, 1), &[(1, 1)])])
}

/// Heisenberg algebra: `[X_1, X_2] = X_3`.
pub fn heisenberg3() -> LieAlgebroid {
    lie_algebra(3, &[((0, 1), &[(2, 1)])])
}

/// `sl(2)` in the standard basis `(h, e, f)`:
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebroid {
    lie_algebra(
        3,
        &[
            ((0, 1), &[(1, 2)]),
            ((0, 2), &[(2, -2)]),
            ((1, 2), &[(0, 1)]),
        ],
    )
}

/// Solvable family: `[X_1, X_2] = X_2`, `[X_1, X_3] = λ X_3`.
pub fn r3_lambda(lambda: Rational) -> LieAlgebroid {
    lie_algebra_rational(
        3,
        &[
            ((0, 1), vec![(1, Rational::from_integer(1.into()))]),
            ((0, 2), vec![(2, lambda)]),
        ],
    )
}

/// Abelian Lie algebra of rank `n`.
pub fn abelian(n: usize) -> LieAlgebroid {
    lie_algebra(n, &[])
}

/// Direct sum of `copies` copies of [`aff1`]; nontrivial differentials in
/// every middle degree, useful for rank stress tests.
pub fn aff1_sum(copies: usize) -> LieAlgebroid {
    let n = 2 * copies;
    let mut map = BTreeMap::new();
    for c in 0..copies {
        let mut comps = vec![Coeff::zero(0); n];
        comps[2 * c + 1] = Coeff::one(0);
        map.insert((2 * c, 2 * c + 1), comps);
    }
    LieAlgebroid::new(
        vec![],
        default_frame_names(n),
        default_coframe_names(n),
        vec![vec![]; n],
        map,
    )
    .expect("well-formed structure data")
}

/// Constant rank-3 structure `c^3_{12} = c^1_{23} = c^2_{13} = 1` with zero
/// anchor; satisfies the Jacobi identity.
pub fn rank3_triple() -> LieAlgebroid {
    lie_algebra(
        3,
        &[
            ((0, 1), &[(2, 1)]),
            ((1, 2), &[(0, 1)]),
            ((0, 2), &[(1, 1)]),
        ],
    )
}

/// Genuinely Jacobi-violating constants: `[X_1,X_2] = X_2`, `[X_2,X_3] = X_3`.
/// The (1,2,3) residual is `-X_3`.
pub fn broken_jacobi3() -> LieAlgebroid {
    lie_algebra(3, &[((0, 1), &[(1, 1)]), ((1, 2), &[(2, 1)])])
}

/// The tangent algebroid of the plane with coordinates `x, y`.
pub fn tangent_plane() -> LieAlgebroid {
    LieAlgebroid::tangent(vec!["x".into(), "y".into()])
}

/// The tangent algebroid of `m`-space with coordinates `u1..um`.
pub fn tangent_space(m: usize) -> LieAlgebroid {
    LieAlgebroid::tangent((1..=m).map(|i| format!("u{i}")).collect())
}

/// An aff(1)-action presentation over one coordinate with a perturbed
/// anchor: `[e1,e2] = e2` but `ρ(e1) = ρ(e2) = ∂_x`, which breaks the
/// anchor compatibility `ρ([e1,e2]) = [ρ(e1), ρ(e2)] = 0`.
pub fn broken_aff1_action() -> LieAlgebroid {
    let mut map = BTreeMap::new();
    map.insert((0, 1), vec![Coeff::zero(1), Coeff::one(1)]);
    LieAlgebroid::new(
        vec!["x".into()],
        default_frame_names(2),
        default_coframe_names(2),
        vec![vec![Coeff::one(1)], vec![Coeff::one(1)]],
        map,
    )
    .expect("well-formed structure data")
}

/// The valid counterpart of [`broken_aff1_action`]: `ρ(e1) = ∂_x`,
/// `ρ(e2) = 0`.
pub fn aff1_action() -> LieAlgebroid {
    let mut map = BTreeMap::new();
    map.insert((0, 1), vec![Coeff::zero(1), Coeff::one(1)]);
    LieAlgebroid::new(
        vec!["x".into()],
        default_frame_names(2),
        default_coframe_names(2),
        vec![vec![Coeff::one(1)], vec![Coeff::zero(1)]],
        map,
    )
    .expect("well-formed structure data")
}

/// Every valid algebroid above, with stable labels; used by the
/// property-based suites.
pub fn validating_corpus() -> Vec<(String, LieAlgebroid)> {
    vec![
        ("aff1".into(), aff1()),
        ("heisenberg3".into(), heisenberg3()),
        ("sl2".into(), sl2()),
        (
            "r3(1)".into(),
            r3_lambda(Rational::from_integer(1.into())),
        ),
        (
            "r3(-1)".into(),
            r3_lambda(Rational::from_integer((-1).into())),
        ),
        (
            "r3(1/2)".into(),
            r3_lambda(Rational::new(1.into(), 2.into())),
        ),
        ("abelian3".into(), abelian(3)),
        ("rank3-triple".into(), rank3_triple()),
        ("tangent-plane".into(), tangent_plane()),
        ("aff1-action".into(), aff1_action()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_corpus_entry_validates() {
        for (name, e) in validating_corpus() {
            assert!(e.validate().passes(), "{name} failed validation");
        }
    }

    #[test]
    fn broken_entries_fail() {
        assert!(!broken_jacobi3().validate().passes());
        assert!(!broken_aff1_action().validate().passes());
    }

    #[test]
    fn aff1_sum_brackets() {
        let e = aff1_sum(2);
        assert_eq!(e.rank(), 4);
        assert!(e.validate().passes());
        let b = e.bracket_frame(0, 1);
        assert!(b.component(1).is_one());
        assert!(e.bracket_frame(0, 2).is_zero());
    }
}
