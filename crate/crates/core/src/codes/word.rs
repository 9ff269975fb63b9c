use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::polys::{PolyF2, PolyR};
use crate::ring::RingElement;

/// Vector of `n` ring elements, identified with a polynomial of degree below `n`
/// in `R[x]/(x^n - 1)` (coordinate `j` is the coefficient of `x^j`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingWord(Vec<RingElement>);

impl RingWord {
    pub fn new(coords: Vec<RingElement>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![RingElement::ZERO; n])
    }

    /// The constant word `(c, c, .., c)`, i.e. `c * (1 + x + .. + x^(n-1))`.
    pub fn constant(n: usize, c: RingElement) -> Self {
        Self(vec![c; n])
    }

    /// Reduces `p` modulo `x^n - 1`.
    pub fn from_poly(p: &PolyR, n: usize) -> Self {
        let reduced = p.reduce_cyclic(n);
        Self((0..n).map(|i| reduced.coeff(i)).collect())
    }

    pub fn from_poly_f2(p: &PolyF2, n: usize) -> Self {
        Self::from_poly(&PolyR::from(p), n)
    }

    pub fn to_poly(&self) -> PolyR {
        PolyR::new(self.0.clone())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Cyclic right shift: `(x_{n-1}, x_0, .., x_{n-2})`, i.e. multiplication by `x`.
    pub fn shift(&self) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_right(1);
        }
        Self(v)
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|c| c.complement()).collect())
    }

    /// Reverse, then complement each coordinate.
    pub fn reverse_complement(&self) -> Self {
        Self(self.0.iter().rev().map(|c| c.complement()).collect())
    }

    pub fn scale(&self, c: RingElement) -> Self {
        Self(self.0.iter().map(|&x| x * c).collect())
    }

    pub fn add(&self, other: &RingWord) -> Self {
        assert_eq!(self.len(), other.len(), "word lengths differ");
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// Bit-packed form: coordinate `j` occupies bits `4j..4j+4`.
    pub fn pack(&self) -> Vec<u64> {
        let mut words = vec![0u64; packed_len(self.len())];
        for (j, c) in self.0.iter().enumerate() {
            words[j / 16] |= (c.bits() as u64) << (4 * (j % 16));
        }
        words
    }

    pub fn unpack(bits: &[u64], n: usize) -> Self {
        Self(
            (0..n)
                .map(|j| RingElement::from_bits((bits[j / 16] >> (4 * (j % 16))) as u8))
                .collect(),
        )
    }
}

/// Number of `u64` words needed for a packed word of length `n`.
pub(crate) fn packed_len(n: usize) -> usize {
    n.div_ceil(16).max(1)
}

/// Hex digits of each coordinate, no separator.
impl fmt::Display for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Comma-separated ring elements (`1,0,1+u`) or a run of hex digits (`10F`).
impl FromStr for RingWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseError::Word(s.to_string()));
        }
        let coords: Result<Vec<_>, _> = if t.contains(',') {
            t.split(',').map(|c| c.parse::<RingElement>()).collect()
        } else {
            t.chars()
                .map(|c| c.to_string().parse::<RingElement>())
                .collect()
        };
        coords
            .map(Self)
            .map_err(|_| ParseError::Word(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_word(max_n: usize) -> impl Strategy<Value = RingWord> {
        proptest::collection::vec(0u8..16, 1..=max_n)
            .prop_map(|v| RingWord::new(v.into_iter().map(RingElement::from_bits).collect()))
    }

    #[test]
    fn word_ops() {
        let w: RingWord = "1,0,0,0,0,0".parse().unwrap();
        assert_eq!(w, "100000".parse().unwrap());
        let mut s = w.clone();
        for _ in 0..6 {
            s = s.shift();
        }
        assert_eq!(s, w);
        assert_eq!(w.shift(), "010000".parse().unwrap());
        assert_eq!(
            RingWord::zero(4).reverse_complement(),
            "FFFF".parse().unwrap()
        );
        assert!("1,x".parse::<RingWord>().is_err());
    }

    proptest! {
        #[test]
        fn rc_is_an_involution(w in arb_word(40)) {
            prop_assert_eq!(w.reverse_complement().reverse_complement(), w.clone());
            prop_assert_eq!(w.reverse_complement(), w.reverse().complement());
        }

        #[test]
        fn pack_roundtrip(w in arb_word(70)) {
            prop_assert_eq!(RingWord::unpack(&w.pack(), w.len()), w);
        }

        #[test]
        fn shift_is_multiplication_by_x(w in arb_word(20)) {
            let x = PolyR::new(vec![RingElement::ZERO, RingElement::ONE]);
            prop_assert_eq!(RingWord::from_poly(&(&w.to_poly() * &x), w.len()), w.shift());
        }
    }
}
