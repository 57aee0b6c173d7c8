//! Spot checks of the identity registry: right-hand-side goldens, closed
//! left-hand-side goldens, verification outcomes, and parameter guards.

use num_bigint::BigInt;
use num_traits::One;

use emstats::exec::ExecMode;
use emstats::identities::{
    rhs_series, verify, verify_perturbed, IdentityError, IdentityId, Perturbation,
};
use emstats::series::{lhs_series, ExponentVector, LhsKind, Polynomial, TruncatedSeries, VarId};

fn t_poly(coeffs: &[i64]) -> Polynomial {
    let mut p = Polynomial::zero();
    for (e, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            p.add_term(ExponentVector::var(VarId::T, e as u32), &BigInt::from(c));
        }
    }
    p
}

#[test]
fn rhs_goldens() {
    let mode = ExecMode::default();
    // (k+1)^1 t^k for k = 0..3.
    assert_eq!(
        rhs_series(IdentityId::EulerianA, 1, 1, 3, mode).unwrap(),
        TruncatedSeries::new(t_poly(&[1, 2, 3, 4]), 3)
    );
    // Type-D Eulerian counts: |D_2 at height k| gives 1 + 5t.
    assert_eq!(
        rhs_series(IdentityId::DEulerian, 2, 2, 1, mode).unwrap(),
        TruncatedSeries::new(t_poly(&[1, 5]), 1)
    );
    // Carlitz for n = 2: coefficient of t^0 is 1, of t^1 is (1+q)^2.
    let carlitz = rhs_series(IdentityId::Carlitz, 1, 2, 2, mode).unwrap();
    assert_eq!(carlitz.coeff(&ExponentVector::one()), BigInt::one());
    let tq = |t: u32, q: u32| ExponentVector::from_pairs([(VarId::T, t), (VarId::Q, q)]);
    assert_eq!(carlitz.coeff(&tq(1, 0)), BigInt::one());
    assert_eq!(carlitz.coeff(&tq(1, 1)), BigInt::from(2));
    assert_eq!(carlitz.coeff(&tq(1, 2)), BigInt::one());
}

#[test]
fn lhs_goldens() {
    // productK1, n = 1: 1 + (1 + z1) z0 + (1 + z1 + z1^2) z0^2.
    let lhs = lhs_series(LhsKind::ProductK1, 1, 1, 2);
    let mut expected = Polynomial::one();
    for k in 1..=2u32 {
        for e in 0..=k {
            expected.add_term(
                ExponentVector::from_pairs([(VarId::Z(0), k), (VarId::Z(1), e)]),
                &BigInt::one(),
            );
        }
    }
    assert_eq!(lhs, TruncatedSeries::new(expected, 2));

    // qPower, n = 2: 1 + (1+q)^2 t.
    let lhs = lhs_series(LhsKind::QPower, 1, 2, 1);
    let tq = |t: u32, q: u32| ExponentVector::from_pairs([(VarId::T, t), (VarId::Q, q)]);
    assert_eq!(lhs.coeff(&tq(1, 1)), BigInt::from(2));
    assert_eq!(lhs.coeff(&tq(1, 2)), BigInt::one());

    // typeD, n = 2: (2k+1)^2 - 2(B_2(k+1) - B_2(0)) gives 1 + 5t.
    assert_eq!(
        lhs_series(LhsKind::TypeD, 2, 2, 1),
        TruncatedSeries::new(t_poly(&[1, 5]), 1)
    );
}

#[test]
fn verify_goldens() {
    let mode = ExecMode::default();
    let report = verify(IdentityId::Carlitz, 1, 3, 5, mode).unwrap();
    assert!(report.matched && report.first_mismatch.is_none());
    assert!(verify(IdentityId::MultivariateA, 1, 3, 3, mode).unwrap().matched);

    // Perturbing a statistic must surface a mismatch with a witness.
    for perturb in [Perturbation::Grading, Perturbation::QStat] {
        let report = verify_perturbed(IdentityId::Carlitz, 1, 3, 5, mode, perturb).unwrap();
        assert!(!report.matched);
        assert!(report.first_mismatch.is_some());
    }
}

#[test]
fn parameter_guards() {
    let mode = ExecMode::default();
    assert!(matches!(
        verify(IdentityId::Carlitz, 2, 3, 3, mode),
        Err(IdentityError::FixedR { .. })
    ));
    assert!(matches!(
        verify(IdentityId::DEulerian, 2, 1, 3, mode),
        Err(IdentityError::MinN { .. })
    ));
    assert!(matches!(
        verify(IdentityId::WreathEulerian, 4, 12, 1, mode),
        Err(IdentityError::Budget { .. })
    ));
    assert!("no-such-identity".parse::<IdentityId>().is_err());
}
