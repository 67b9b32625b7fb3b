use remmelkit::rook::{
    full_board_series, maj_des_series, stirling_q, stirling_side_series, DenominatorRange,
};
use remmelkit::{Poly, Rational, Var};

#[test]
fn stirling_at_one() {
    // S(n,k) for n = 5
    let want = [0, 1, 15, 25, 10, 1];
    for (k, &w) in want.iter().enumerate() {
        let v = stirling_q::<Rational>(5, k).subs(Var::Q, &Rational::from_integer(1.into()));
        assert_eq!(v, Poly::from_int(w));
    }
    assert_eq!(stirling_q::<Rational>(4, 2), "3q + 3q^2 + q^3".parse::<Poly>().unwrap());
    assert_eq!(stirling_q::<Rational>(4, 3), "3q^3 + 2q^4 + q^5".parse::<Poly>().unwrap());
}

#[test]
fn triple_identity_n2_by_hand() {
    // (t + q t^2) / ((1 - tq)(1 - tq^2))
    let s = maj_des_series::<Rational>(2, 3).unwrap();
    assert_eq!(s.coeff(1), &"1".parse::<Poly>().unwrap());
    assert_eq!(s.coeff(2), &"2q + q^2".parse::<Poly>().unwrap());
    assert_eq!(stirling_side_series::<Rational>(2, 3, DenominatorRange::FromOne).unwrap(), s);
    assert_eq!(full_board_series::<Rational>(2, 3), s);
}
