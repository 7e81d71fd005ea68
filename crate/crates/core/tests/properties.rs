use fockpoly::algebra::{integer, Monomial, Polynomial, Rational};
use fockpoly::invariants::{power_traces, AlgorithmRegistry};
use fockpoly::matrix::ExactMatrix;
use fockpoly::operators::{cauchy_j, LinearOperator};
use fockpoly::partitions::{enumerate_partitions, from_symbol, to_symbol, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..3, 0..5), small_rational()),
        0..6,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(exps, c)| (Monomial::from_exponents(&exps), c)),
        )
    })
}

/// Homogeneous polynomial of the given weight, built from partitions.
fn homogeneous(weight: u32) -> impl Strategy<Value = Polynomial> {
    let count = enumerate_partitions(weight).len();
    prop::collection::vec(small_rational(), count).prop_map(move |coeffs| {
        Polynomial::from_terms(
            enumerate_partitions(weight)
                .iter()
                .zip(coeffs)
                .map(|(lambda, c)| (to_symbol(lambda).monomial(), c)),
        )
    })
}

fn integer_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-9i64..=9, n * n)
        .prop_map(move |v| ExactMatrix::new(n, v.into_iter().map(integer).collect()).unwrap())
}

fn rational_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(small_rational(), n * n)
        .prop_map(move |v| ExactMatrix::new(n, v).unwrap())
}

proptest! {
    #[test]
    fn canonical_form(p in polynomial(), q in polynomial()) {
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert!(p.terms().all(|(_, c)| c != &Rational::from_integer(BigInt::from(0))));
    }

    #[test]
    fn ring_axioms(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
    }

    #[test]
    fn leibniz(p in polynomial(), q in polynomial(), i in 1u32..=5) {
        let lhs = (&p * &q).partial(i);
        let rhs = &p.partial(i) * &q + &p * &q.partial(i);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grading(
        (a, b, p, q) in (1u32..5, 1u32..5)
            .prop_flat_map(|(a, b)| (Just(a), Just(b), homogeneous(a), homogeneous(b)))
    ) {
        let product = &p * &q;
        if !product.is_zero() {
            prop_assert_eq!(product.homogeneous_weight(), Some((a + b) as u64));
        }
    }

    #[test]
    fn operators_are_linear(p in polynomial(), q in polynomial(), a in small_rational(), b in small_rational()) {
        let ops = [
            LinearOperator::delta(),
            LinearOperator::raising_minus(),
            LinearOperator::raising_plus(),
            LinearOperator::partial(2),
            LinearOperator::times_var(3),
            LinearOperator::weight_number(),
        ];
        let combo = p.scale(&a) + q.scale(&b);
        for op in &ops {
            prop_assert_eq!(
                op.apply(&combo),
                op.apply(&p).scale(&a) + op.apply(&q).scale(&b),
                "{}", op
            );
        }
    }

    #[test]
    fn partition_round_trip(parts in prop::collection::vec(1u32..8, 1..8)) {
        let lambda = Partition::new(parts).unwrap();
        let alpha = to_symbol(&lambda);
        prop_assert_eq!(alpha.total(), lambda.total());
        prop_assert_eq!(from_symbol(&alpha), lambda);
    }

    #[test]
    fn determinant_paths_agree(m in rational_matrix(4)) {
        prop_assert_eq!(m.determinant(), m.determinant_gaussian());
    }

    #[test]
    fn all_registered_algorithms_agree(m in integer_matrix(4)) {
        let registry = AlgorithmRegistry::default();
        let reference = registry.get("minors").unwrap().prodets(&m).unwrap();
        for algorithm in registry.iter() {
            prop_assert_eq!(&algorithm.prodets(&m).unwrap(), &reference, "{}", algorithm.name());
        }
    }

    #[test]
    fn cauchy_polynomials_at_power_traces(m in rational_matrix(3)) {
        // k! J_k = j_k(I_1, ..., I_k)
        let traces = power_traces(&m, 3);
        let minors = AlgorithmRegistry::default().get("minors").unwrap().prodets(&m).unwrap();
        let factorials = [1, 2, 6];
        for k in 1..=3u32 {
            let lhs = &minors[k as usize - 1] * integer(factorials[k as usize - 1]);
            prop_assert_eq!(cauchy_j(k).evaluate_seq(&traces).unwrap(), lhs);
        }
    }
}
