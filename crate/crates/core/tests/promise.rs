use proptest::prelude::*;

use djh_core::cyclotomic::{dephi_decompose, f_poly};
use djh_core::group::{build_abelian, build_cyclic};
use djh_core::promise::{
    abelian_reduce, classify_definitional, classify_polynomial, cyclic_reduce, even_cover_check, even_cover_decompose,
    profile_polynomial, FunctionProfile, PromiseFunction, Verdict,
};
use djh_core::representation::builtin_irreps;
use djh_core::IntPolynomial;

fn z8_profile(counts: [u64; 8]) -> PromiseFunction {
    FunctionProfile::new(8, counts.to_vec())
        .unwrap()
        .canonical_function()
        .unwrap()
}

#[test]
fn balanced_examples_into_z8() {
    let cases: [([u64; 8], &[i64]); 4] = [
        ([1; 8], &[1, 1, 1, 1]),
        ([0, 4, 0, 0, 0, 4, 0, 0], &[0, 4]),
        ([0, 2, 0, 2, 0, 2, 0, 2], &[0, 2, 0, 2]),
        ([0, 3, 1, 0, 0, 3, 1, 0], &[0, 3, 1]),
    ];
    for (counts, s) in cases {
        let f = z8_profile(counts);
        assert_eq!(classify_polynomial(&f, 1).unwrap(), Verdict::Balanced);
        let dec = dephi_decompose(&profile_polynomial(&f).unwrap().polynomial(), 8).unwrap();
        assert_eq!(dec.s1, IntPolynomial::from_i64s(s), "{counts:?}");
        assert_eq!(dec.s2, None);
        let report = even_cover_check(&f, 4).unwrap();
        assert!(report.all_even());
    }
}

#[test]
fn four_valued_even_example_covers_odd_cosets() {
    let f = z8_profile([0, 2, 0, 2, 0, 2, 0, 2]);
    let m = even_cover_check(&f, 4).unwrap().multiplicities();
    assert_eq!(m, vec![Some(0), Some(2), Some(0), Some(2)]);
}

#[test]
fn uneven_example_is_not_an_even_cover_of_every_coset_size() {
    // 3, 1, 3, 1 over the values 1, 2, 5, 6: balanced, but the cosets of
    // ⟨2⟩ are hit unevenly
    let f = z8_profile([0, 3, 1, 0, 0, 3, 1, 0]);
    assert!(!even_cover_check(&f, 2).unwrap().all_even());
    assert!(even_cover_check(&f, 4).unwrap().all_even());
}

#[test]
fn cyclic_reduction_n8_k6() {
    let z8 = build_cyclic(8).unwrap();
    let f = PromiseFunction::new(z8.clone(), vec![0, 2, 5, 7, 1, 3]).unwrap();
    let r = cyclic_reduce(&f, 6).unwrap();
    assert_eq!((r.u, r.v, r.d), (3, 4, 2));
    assert_eq!(r.fbar.image(), &[0, 2, 1, 3, 1, 3]);
    let set8 = builtin_irreps(&z8).unwrap();
    let set4 = builtin_irreps(r.fbar.codomain()).unwrap();
    let direct = classify_definitional(&f, &set8, 6, 0, 1e-9).unwrap().verdict;
    let reduced = classify_definitional(&r.fbar, &set4, 3, 0, 1e-9).unwrap().verdict;
    assert_eq!(direct, reduced);
    assert_eq!(direct, Verdict::Balanced);
}

#[test]
fn dephi_round_trip_n12() {
    let s1 = IntPolynomial::from_i64s(&[1, 0, 2, 1, 0, 3]);
    let s2 = IntPolynomial::from_i64s(&[0, 1, 1, 2]);
    let g = &(&s1 * &f_poly(2).substitute_power(6)) + &(&s2 * &f_poly(3).substitute_power(4));
    let dec = dephi_decompose(&g, 12).unwrap();
    assert_eq!(dec.recombine(), g);
    assert!(dec.s1.is_non_negative());
    assert!(dec.s2.as_ref().unwrap().is_non_negative());
    assert!(dec.s1.degree().unwrap() < 6 && dec.s2.as_ref().unwrap().degree().unwrap() < 4);
}

#[test]
fn cover_partition_sizes_n15() {
    let s1 = IntPolynomial::from_i64s(&[4, 2, 1, 0, 3]);
    let s2 = IntPolynomial::from_i64s(&[2, 0, 1]);
    let g = &(&s1 * &f_poly(3).substitute_power(5)) + &(&s2 * &f_poly(5).substitute_power(3));
    let counts = (0..15).map(|e| u64::try_from(g.coeff(e)).unwrap()).collect();
    let f = FunctionProfile::new(15, counts).unwrap().canonical_function().unwrap();
    let part = even_cover_decompose(&f).unwrap();
    let sizes: Vec<(u64, usize, u64)> = part
        .parts
        .iter()
        .map(|p| (p.prime, p.domain.len(), p.cover_count()))
        .collect();
    assert_eq!(sizes, vec![(3, 30, 10), (5, 15, 3)]);
}

proptest! {
    #[test]
    fn abelian_reduction_preserves_verdicts(image in prop::collection::vec(0usize..6, 1..=8), m in 1usize..6) {
        let g = build_abelian(&[2, 3]).unwrap();
        let f = PromiseFunction::new(g.clone(), image).unwrap();
        let set = builtin_irreps(&g).unwrap();
        let direct = classify_definitional(&f, &set, m, 0, 1e-9).unwrap().verdict;
        let reduced = abelian_reduce(&f, m, &[2, 3]).unwrap();
        prop_assert_eq!(classify_polynomial(&reduced, 1).unwrap(), direct);
    }

    #[test]
    fn polynomial_and_definitional_routes_agree(n in 2usize..=12, image in prop::collection::vec(0usize..64, 1..=9), k in 0usize..64) {
        let z = build_cyclic(n).unwrap();
        let f = PromiseFunction::new(z.clone(), image.iter().map(|v| v % n).collect()).unwrap();
        let k = 1 + k % (n - 1);
        let set = builtin_irreps(&z).unwrap();
        let def = classify_definitional(&f, &set, k, 0, 1e-9).unwrap().verdict;
        prop_assert_eq!(classify_polynomial(&f, k).unwrap(), def);
    }
}
