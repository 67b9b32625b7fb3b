use remmelkit::objects::{
    derangement_cycle_word, eulerian_polynomial, partitions, partitions_filtered, permutations,
    q_derangement, word_statistics_polynomial, Permutation,
};
use remmelkit::{Poly, Rational, Var};

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let odd: Vec<String> = partitions_filtered(5, |k| k % 2 == 1).iter().map(|l| l.to_string()).collect();
    assert_eq!(odd, vec!["(5)", "(3,1,1)", "(1,1,1,1,1)"]);
}

#[test]
fn frozen_polynomials() {
    assert_eq!(eulerian_polynomial::<Rational>(4), p("1 + 11x + 11x^2 + x^3"));
    assert!(word_statistics_polynomial::<Rational>(0, 3).unwrap().is_one());
    assert_eq!(word_statistics_polynomial::<Rational>(1, 2).unwrap(), p("1 + q"));
    assert_eq!(word_statistics_polynomial::<Rational>(2, 2).unwrap(), p("1 + q + x*q + q^2"));
    assert!(q_derangement::<Rational>(1).is_zero());
    assert!(q_derangement::<Rational>(2).is_one());
    assert_eq!(q_derangement::<Rational>(3), p("q + q^2"));
    assert_eq!(q_derangement::<Rational>(4), p("1 + q + 2q^2 + 2q^3 + 2q^4 + q^5"));
}

#[test]
fn word_totals() {
    for k in 1..=3 {
        for n in 0..=4 {
            let w = word_statistics_polynomial::<Rational>(n, k).unwrap();
            let one = Rational::from_integer(1.into());
            let total = w.subs(Var::X, &one).subs(Var::Q, &one);
            assert_eq!(total, Poly::from_int((k as i64).pow(n as u32)));
        }
    }
}

#[test]
fn cycle_words_are_injective() {
    for n in 2..=6 {
        let mut seen = std::collections::BTreeSet::new();
        for sigma in permutations(n).filter(Permutation::is_derangement) {
            assert!(seen.insert(derangement_cycle_word(&sigma).unwrap()));
        }
    }
}
