//! Fixed inputs for the benchmarks in `benches/`.

use whfact_core::{GaussianRational, MatPoly, Polynomial, RatMatFun, RatMatrix, RationalFunction};

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn rf(n: Polynomial, d: Polynomial) -> RationalFunction {
    RationalFunction::new(n, d).expect("nonzero denominator")
}

/// `[[1, 1/(z−1)], [0, 1]]`.
pub fn golden() -> RatMatFun {
    RatMatFun::from_entries(vec![
        vec![RationalFunction::one(), rf(p(&[1]), p(&[-1, 1]))],
        vec![RationalFunction::zero(), RationalFunction::one()],
    ])
    .expect("nonsingular")
}

/// `[[1/(z−1)³, 0], [z²/(z−1)⁴, z⁵/(z−1)⁴]]`.
pub fn xi() -> RatMatFun {
    let zm1 = p(&[-1, 1]);
    RatMatFun::from_entries(vec![
        vec![rf(p(&[1]), zm1.pow(3)), RationalFunction::zero()],
        vec![rf(Polynomial::z_pow(2), zm1.pow(4)), rf(Polynomial::z_pow(5), zm1.pow(4))],
    ])
    .expect("nonsingular")
}

/// 3×3 symbol with poles on and off the circle.
pub fn mixed3() -> RatMatFun {
    let half = Polynomial::linear(&GaussianRational::ratio(1, 2));
    let two = p(&[-2, 1]);
    let zm1 = p(&[-1, 1]);
    let zpi = Polynomial::linear(&-GaussianRational::i());
    let d = RatMatrix::diagonal(&[
        rf(&zm1 * &two, half.clone()),
        rf(zpi.clone(), &zm1 * &half),
        rf(p(&[0, 1]), zm1.clone()),
    ]);
    let shear = MatPoly::new(vec![
        vec![p(&[1]), p(&[1, 1]), p(&[])],
        vec![p(&[]), p(&[1]), p(&[0, -1])],
        vec![p(&[]), p(&[]), p(&[1])],
    ])
    .expect("square")
    .to_rational();
    let omega = RatMatrix::product(&[&shear, &d, &shear.transpose()]).expect("sizes agree");
    RatMatFun::from_matrix(omega).expect("nonsingular")
}

/// Polynomial part `qΩ` of [`mixed3`].
pub fn mixed3_poly() -> MatPoly {
    mixed3().p1
}

#[cfg(test)]
mod tests {
    use super::*;
    use whfact_core::{verify_wh, wh_factorize};

    #[test]
    fn fixtures_factor_and_verify() {
        for omega in [golden(), xi(), mixed3()] {
            let (fact, trace) = wh_factorize(&omega).unwrap();
            assert!(trace.checks.all_passed());
            assert!(verify_wh(&omega, &fact).all_passed());
        }
        assert_eq!(mixed3_poly().size(), 3);
    }
}
