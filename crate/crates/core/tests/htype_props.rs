use htype_core::clifford::{
    is_skew_adjoint_form, minimal_admissible_module, satisfies_clifford_relations, Signature,
    MINIMAL_DIMENSION_FIXTURE,
};
use htype_core::exact::ExactScalar;
use htype_core::htype::{build_htype, ad_surjective, BasisRef, GradedNilpotentAlgebra};
use proptest::prelude::*;

#[test]
fn modules_up_to_eight() {
    let fixture: std::collections::HashMap<_, _> = MINIMAL_DIMENSION_FIXTURE.iter().copied().collect();
    for n in 1..=8 {
        for sig in Signature::with_total(n) {
            let rep = minimal_admissible_module(sig).unwrap();
            assert!(satisfies_clifford_relations(&rep.generators, sig), "{sig}");
            assert!(is_skew_adjoint_form(&rep.generators, &rep.form), "{sig}");
            if let Some(&d) = fixture.get(&(sig.r, sig.s)) {
                assert_eq!(rep.module_dim, d, "{sig}");
            }
            let (alg, metric) = build_htype(&rep).unwrap();
            assert_eq!((alg.dim(-2), alg.dim(-1)), (n, rep.module_dim));
            assert!(alg.jacobi_violations().is_empty());
            assert_eq!(metric.reconstruct_j(&alg).unwrap(), rep.generators, "{sig}");
            assert!(metric.defining_identity_violations(&alg, &rep.generators).is_empty());
        }
    }
}

fn norm(form: &htype_core::exact::ExactMatrix, x: &[ExactScalar]) -> ExactScalar {
    let bx = form.mul_vec(x).unwrap();
    x.iter().zip(&bx).map(|(a, b)| a * b).sum()
}

proptest! {
    #[test]
    fn non_null_elements_are_surjective(
        k in 0usize..6,
        coeffs in prop::collection::vec(-2i64..=2, 16),
    ) {
        let (r, s) = [(1, 0), (3, 0), (1, 2), (2, 2), (0, 3), (4, 1)][k];
        let rep = minimal_admissible_module(Signature::new(r, s).unwrap()).unwrap();
        let (alg, metric) = build_htype(&rep).unwrap();
        let x: Vec<ExactScalar> = coeffs[..alg.dim(-1)].iter().map(|&c| ExactScalar::from_int(c)).collect();
        if !norm(&metric.form_module, &x).is_zero() {
            prop_assert!(ad_surjective(&alg, &x));
        }
        if x.iter().all(ExactScalar::is_zero) {
            prop_assert!(!ad_surjective(&alg, &x));
        }
    }
}

fn random_algebra() -> impl Strategy<Value = GradedNilpotentAlgebra> {
    (2usize..=5, 1usize..=3).prop_flat_map(|(d1, d2)| {
        let pairs = d1 * (d1 - 1) / 2;
        prop::collection::vec((-3i64..=3, 1i64..=4), pairs * d2).prop_map(move |flat| {
            let mut alg = GradedNilpotentAlgebra::new(&[(-2, d2), (-1, d1)]);
            let mut it = flat.chunks(d2);
            for a in 0..d1 {
                for b in a + 1..d1 {
                    let v = it.next().unwrap().iter().map(|&(p, q)| ExactScalar::ratio(p, q)).collect();
                    alg.set_bracket(BasisRef::new(-1, a), BasisRef::new(-1, b), v).unwrap();
                }
            }
            alg
        })
    })
}

proptest! {
    #[test]
    fn json_round_trip(alg in random_algebra()) {
        let v = alg.to_json();
        let back = GradedNilpotentAlgebra::from_json(&v).unwrap();
        prop_assert_eq!(back.to_json(), v);
        for x in alg.basis() {
            for y in alg.basis() {
                let xy = alg.bracket(x, y);
                let yx: Vec<ExactScalar> = alg.bracket(y, x).iter().map(|c| -c).collect();
                prop_assert_eq!(&xy, &yx);
                prop_assert_eq!(back.bracket(x, y), xy);
            }
        }
    }
}
