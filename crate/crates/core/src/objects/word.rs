use crate::algebra::{MultiPoly, Scalar};
use crate::error::{Error, Result};

/// A word over the alphabet `{0..k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    alphabet: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, alphabet: usize) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&l| l >= alphabet) {
            return Err(Error::domain(format!("letter {bad} outside alphabet of size {alphabet}")));
        }
        Ok(Word { letters, alphabet })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn descents(&self) -> usize {
        self.letters.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn letter_sum(&self) -> usize {
        self.letters.iter().sum()
    }
}

/// All `k^n` words of length `n`, lexicographically.
pub fn words(n: usize, k: usize) -> impl Iterator<Item = Word> {
    let total = if k == 0 && n > 0 { 0 } else { k.pow(n as u32) };
    (0..total).map(move |mut idx| {
        let mut letters = vec![0; n];
        for slot in letters.iter_mut().rev() {
            *slot = idx % k;
            idx /= k;
        }
        Word { letters, alphabet: k }
    })
}

/// `sum over words w of length n on {0..k-1} of x^des(w) q^sum(w)`.
pub fn word_statistics_polynomial<S: Scalar>(n: usize, k: usize) -> Result<MultiPoly<S>> {
    if k == 0 {
        return Err(Error::domain("alphabet size must be at least 1"));
    }
    let mut out = MultiPoly::zero();
    for w in words(n, k) {
        out.add_term([w.letter_sum() as u32, w.descents() as u32, 0, 0], S::one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational, Var};

    #[test]
    fn small_word_polynomials() {
        let w = |n, k| word_statistics_polynomial::<Rational>(n, k).unwrap();
        assert!(w(0, 3).is_one());
        assert_eq!(w(1, 2), "1 + q".parse::<Poly>().unwrap());
        assert_eq!(w(2, 2), "1 + q + x*q + q^2".parse::<Poly>().unwrap());
    }

    #[test]
    fn total_is_k_to_the_n() {
        let one = Rational::from_int(1);
        for n in 0..=4 {
            for k in 1..=4 {
                let p = word_statistics_polynomial::<Rational>(n, k).unwrap();
                let total = p.subs(Var::X, &one).subs(Var::Q, &one);
                assert_eq!(total.constant_term(), Rational::from_int((k as i64).pow(n as u32)));
            }
        }
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(Word::new(vec![0, 3], 3).is_err());
        assert!(word_statistics_polynomial::<Rational>(2, 0).is_err());
        assert_eq!(Word::new(vec![2, 0, 1], 3).unwrap().descents(), 1);
    }
}
