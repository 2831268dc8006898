use kostka::fermionic::{kostka_fermionic, kostka_fermionic_count, parabolic_fermionic};
use kostka::kostant::{kostka_altsum, parabolic_k};
use kostka::polytopes::{ehrhart_weight, gt_count};
use kostka::qpoly::dot_eq;
use kostka::repth::{internal_spec, kostka_pair_sum, kronecker, transport_pair};
use kostka::symfunc::schur_product_expand;
use kostka::tableaux::kostka_charge;
use kostka::{partitions, Composition, Partition, QPoly, Rect, RectSequence};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn pair_of(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|n| {
        let all = partitions(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

fn rects(max_area: usize) -> impl Strategy<Value = RectSequence> {
    prop::collection::vec((1usize..=3, 1usize..=3), 1..=4)
        .prop_filter("total area", move |v| v.iter().map(|(w, h)| w * h).sum::<usize>() <= max_area)
        .prop_map(|v| RectSequence::dominant_rearrangement(v.into_iter().map(|(w, h)| Rect::new(w, h)).collect()))
}

fn parabolic_instance(max_area: usize) -> impl Strategy<Value = (Partition, RectSequence)> {
    rects(max_area).prop_flat_map(|r| {
        let rows: usize = r.rects().iter().map(|x| x.height).sum();
        let all: Vec<Partition> = partitions(r.size()).into_iter().filter(|l| l.len() <= rows).collect();
        (0..all.len()).prop_map(move |i| (all[i].clone(), r.clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kostka_methods_agree((lam, mu) in pair_of(7)) {
        let c = kostka_charge(&lam, &mu);
        prop_assert_eq!(&c, &kostka_fermionic(&lam, &mu));
        prop_assert_eq!(&c, &kostka_altsum(&lam, &mu));
    }

    #[test]
    fn kostka_is_monic_at_top((lam, mu) in pair_of(8)) {
        let k = kostka_fermionic(&lam, &mu);
        if mu.dominance_leq(&lam) {
            prop_assert_eq!(k.degree(), Some(mu.n_stat() - lam.n_stat()));
            prop_assert_eq!(k.coeff(mu.n_stat() - lam.n_stat()), BigInt::from(1));
        } else {
            prop_assert!(k.is_zero());
        }
    }

    #[test]
    fn gt_points_are_weight_multiplicities((lam, mu) in pair_of(8)) {
        let gt = gt_count(&lam, &Composition::new(mu.parts().to_vec())).unwrap();
        prop_assert_eq!(gt, kostka_fermionic_count(&lam, &mu));
    }

    #[test]
    fn weight_multiplicity_ignores_weight_order((lam, mu) in pair_of(6), seed in 0usize..720) {
        let mut w = mu.parts().to_vec();
        let n = w.len();
        for i in (1..n).rev() {
            w.swap(i, (seed / (i + 1)) % (i + 1));
        }
        prop_assert_eq!(gt_count(&lam, &Composition::new(w)).unwrap(), kostka_fermionic_count(&lam, &mu));
    }

    #[test]
    fn parabolic_methods_agree((lam, r) in parabolic_instance(9)) {
        prop_assert_eq!(parabolic_fermionic(&lam, &r), parabolic_k(&lam, &r).unwrap());
    }

    #[test]
    fn parabolic_duality((lam, r) in parabolic_instance(10)) {
        let k = parabolic_fermionic(&lam, &r);
        let dual = parabolic_fermionic(&lam.conjugate(), &r.transpose());
        prop_assert_eq!(dual, k.subs_pow(-1).shift(r.n_stat()));
    }

    #[test]
    fn parabolic_at_one_is_tensor_multiplicity((lam, r) in parabolic_instance(8)) {
        let factors: Vec<Partition> = r.rects().iter().map(|x| Partition::new(vec![x.width; x.height])).collect();
        let exp = schur_product_expand(&factors, r.rects().iter().map(|x| x.height).sum()).unwrap();
        prop_assert_eq!(parabolic_fermionic(&lam, &r).eval_one(), exp.coeff(&lam).eval_one());
    }

    #[test]
    fn monotone_under_common_part((lam, mu) in pair_of(6), a in 1usize..=4) {
        let small = kostka_fermionic(&lam, &mu);
        let big = kostka_fermionic(&lam.union(&Partition::new(vec![a])), &mu.union(&Partition::new(vec![a])));
        prop_assert!(small.coeffwise_le(&big));
    }

    #[test]
    fn pretty_round_trips((lam, mu) in pair_of(7)) {
        let k = kostka_fermionic(&lam, &mu);
        prop_assert_eq!(QPoly::parse_pretty(&k.pretty()).unwrap(), k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn kronecker_symmetries(n in 1usize..=6, i in 0usize..11, j in 0usize..11, k in 0usize..11) {
        let all = partitions(n);
        let (a, b, c) = (&all[i % all.len()], &all[j % all.len()], &all[k % all.len()]);
        let g = kronecker(a, b, c).unwrap();
        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            prop_assert_eq!(&kronecker(x, y, z).unwrap(), &g);
        }
        prop_assert_eq!(&kronecker(&a.conjugate(), &b.conjugate(), c).unwrap(), &g);
        prop_assert_eq!(&kronecker(&a.conjugate(), b, &c.conjugate()).unwrap(), &g);
    }

    #[test]
    fn kronecker_dimensions((a, b) in pair_of(6)) {
        let mut total = BigInt::zero();
        for c in partitions(a.size()) {
            total += kronecker(&a, &b, &c).unwrap() * c.f_lambda();
        }
        prop_assert_eq!(total, a.f_lambda() * b.f_lambda());
    }

    #[test]
    fn internal_spec_symmetric_unimodal((a, b) in pair_of(5), big_n in 1usize..=5) {
        let s = internal_spec(&a, &b, big_n).unwrap();
        prop_assert!(s.has_nonneg_coeffs());
        prop_assert!(s.is_symmetric());
        prop_assert!(s.is_unimodal());
    }

    #[test]
    fn transport_dot_equality((lam, mu) in pair_of(4), extra in 0usize..=2) {
        let n = lam.len().max(mu.len());
        let big_n = lam.size().max(lam.first() + mu.first()) + extra;
        let (shape, weight) = transport_pair(&lam, &mu, n, big_n).unwrap();
        let lhs = kostka_fermionic(&shape, &weight);
        let rhs = kostka_pair_sum(&lam, &mu);
        prop_assert!(dot_eq(&lhs, &rhs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn ehrhart_fit_predicts_dilations((lam, mu) in pair_of(5)) {
        prop_assume!(mu.dominance_leq(&lam));
        let fit = ehrhart_weight(&lam, &mu).unwrap();
        let d = fit.poly.degree().unwrap_or(0) as i64;
        for l in [d + 3, d + 4] {
            let want = kostka_fermionic_count(&lam.scale(l as usize), &mu.scale(l as usize));
            prop_assert_eq!(fit.poly.eval(l), num_rational::BigRational::from_integer(want));
        }
    }
}
