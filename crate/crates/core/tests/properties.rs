use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use freemix::combinat::{binomial, catalan, fuss_catalan};
use freemix::freeprob::{
    free_cumulants, moments_from_cumulants, op_r, GeneralMomentSequence, MomentSequence,
};
use freemix::ncp::{
    count_nc_by_type, enumerate_nc, interleave_pair, is_noncrossing, kreweras_complement,
    pair_region_sizes, quotient_cycles, PartitionTypeVector, SetPartition,
};
use freemix::rmt::DistributionSpec;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn seq(values: &[i64]) -> MomentSequence {
    MomentSequence::new("p", values.iter().map(|&v| q(v)).collect())
}

/// Index into `NC(k)` for some `k <= 8`.
fn nc_partition() -> impl Strategy<Value = SetPartition> {
    (1usize..=8)
        .prop_flat_map(|k| {
            let count: usize = catalan(k).try_into().unwrap();
            (Just(k), 0..count)
        })
        .prop_map(|(k, i)| enumerate_nc(k).unwrap().swap_remove(i))
}

proptest! {
    #[test]
    fn pascal_rule(n in 1usize..60, r in 1i64..60) {
        prop_assert_eq!(binomial(n, r), binomial(n - 1, r) + binomial(n - 1, r - 1));
        prop_assert_eq!(binomial(n, r), binomial(n, n as i64 - r));
    }

    #[test]
    fn type_counts_sum_to_catalan(k in 1usize..=22) {
        let total: BigInt = PartitionTypeVector::all(k).iter().map(count_nc_by_type).sum();
        prop_assert_eq!(total, catalan(k));
    }

    #[test]
    fn fuss_catalan_matches_definition(k in 0usize..30, m in 0usize..6) {
        // (1/(mk+1)) binom((m+1)k, k)
        let lhs = fuss_catalan(k, m) * BigInt::from(m * k + 1);
        prop_assert_eq!(lhs, binomial((m + 1) * k, k as i64));
    }

    #[test]
    fn kreweras_shape(p in nc_partition()) {
        let k = p.ground_size();
        let kp = kreweras_complement(&p).unwrap();
        prop_assert!(kp.is_noncrossing());
        prop_assert_eq!(p.num_blocks() + kp.num_blocks(), k + 1);
        // applying the complement twice rotates the partition
        let kkp = kreweras_complement(&kp).unwrap();
        prop_assert_eq!(kkp.block_sizes(), p.block_sizes());
        // the interleaving of p and K(p) is non-crossing on [2k]
        prop_assert!(is_noncrossing(&interleave_pair(&p, &kp).unwrap()));
    }

    #[test]
    fn quotient_cycles_partition_the_edges(p in nc_partition()) {
        let cycles = quotient_cycles(&p).unwrap();
        let mut edges: Vec<usize> = cycles.concat();
        edges.sort_unstable();
        prop_assert_eq!(edges, (1..=p.ground_size()).collect::<Vec<_>>());
    }

    #[test]
    fn pair_regions_sum_to_k(p in nc_partition()) {
        // (p, K(p)) is admissible and its k regions all have size 1
        let kp = kreweras_complement(&p).unwrap();
        let x = pair_region_sizes(&p, &kp).unwrap();
        prop_assert_eq!(x.total(), p.ground_size());
        prop_assert_eq!(x.len(), 2 * p.ground_size() + 1 - p.num_blocks() - kp.num_blocks());
        prop_assert!(x.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn partition_json_round_trip(p in nc_partition()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: SetPartition = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn type_vector_text_round_trip(k in 1usize..=10, pick in any::<prop::sample::Index>()) {
        let all = PartitionTypeVector::all(k);
        let alpha = pick.get(&all);
        let text = alpha.to_string();
        let parsed = PartitionTypeVector::parse(text.trim_matches(['(', ')'])).unwrap();
        prop_assert_eq!(&parsed, alpha);
    }

    #[test]
    fn op_r_symmetric_and_fourth_moment(
        a in prop::collection::vec(-20i64..20, 4),
        b in prop::collection::vec(-20i64..20, 4),
    ) {
        let (x, y) = (seq(&a), seq(&b));
        let xy = op_r(&x, &y, 4).unwrap();
        let yx = op_r(&y, &x, 4).unwrap();
        prop_assert_eq!(xy.even_moments(), yx.even_moments());
        // second entry: Omega_2^2 Omega'_4 + Omega_4 Omega'_2^2 - Omega_2^2 Omega'_2^2
        let (a1, a2, b1, b2) = (q(a[0]), q(a[1]), q(b[0]), q(b[1]));
        let expect = &a1 * &a1 * &b2 + &a2 * &b1 * &b1 - &a1 * &a1 * &b1 * &b1;
        prop_assert_eq!(&xy.even_moments()[1], &expect);
    }

    #[test]
    fn cumulant_round_trip(values in prop::collection::vec(-9i64..9, 1..=7)) {
        let g = GeneralMomentSequence::new("g", values.iter().map(|&v| q(v)).collect());
        let kappa = free_cumulants(&g, values.len()).unwrap();
        prop_assert_eq!(moments_from_cumulants(&kappa).unwrap(), g.moments().to_vec());
    }

    #[test]
    fn moment_json_round_trip(values in prop::collection::vec((-50i64..50, 1i64..9), 1..8)) {
        let m = MomentSequence::new(
            "x",
            values.iter().map(|&(p, d)| BigRational::new(p.into(), d.into())).collect(),
        );
        let back: MomentSequence = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn atom_spec_round_trip(v in 1i64..20, d in 1i64..5) {
        let text = format!("atoms:-{v}/{d}@1/4;0@1/2;{v}/{d}@1/4");
        let spec: DistributionSpec = text.parse().unwrap();
        let again: DistributionSpec = spec.to_string().parse().unwrap();
        prop_assert!(spec.is_symmetric());
        prop_assert_eq!(again, spec);
    }
}
