mod common;

use common::*;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use whfact_core::{qr_split_at_zero, verify_triangular_split, MatPoly};

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, rng_seed: RngSeed::Fixed(SEED), ..ProptestConfig::default() })]

    #[test]
    fn recovers_planted_factor((n, fill, shears) in planted_strategy()) {
        let q0 = planted_q(&n, &fill);
        // det R₀ = 1, so R₀(0) is nonsingular
        let r0 = poly_shears(n.len(), &shears);
        let f = q0.mul(&r0).unwrap();
        let s = qr_split_at_zero(&f).unwrap();
        prop_assert_eq!(&s.n_exponents, &n);
        prop_assert_eq!(&s.q, &q0);
        prop_assert_eq!(&s.r, &r0);
        prop_assert!(verify_triangular_split(&f, &s).all_passed());
        prop_assert_eq!(f.det().z_valuation(), Some(n.iter().sum()));
        let again = qr_split_at_zero(&s.r).unwrap();
        prop_assert_eq!(again.q, MatPoly::identity(n.len()));
    }
}
