use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::ParseError;

use super::PolyError;

/// Polynomial over F2, bit-packed little-endian: bit `i` of the packed words
/// is the coefficient of `x^i`. No trailing zero words are stored, so the
/// zero polynomial has an empty word vector.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyF2 {
    words: Vec<u64>,
}

impl PolyF2 {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut p = Self {
            words: vec![0; k / 64 + 1],
        };
        p.words[k / 64] = 1 << (k % 64);
        p
    }

    /// `x + 1`.
    pub fn x_plus_one() -> Self {
        Self { words: vec![0b11] }
    }

    /// `x^n - 1`, which over F2 is `x^n + 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.words[0] ^= 1;
        p.trim();
        p
    }

    /// Builds a polynomial from the low 64 bits of `bits`.
    pub fn from_u64(bits: u64) -> Self {
        let mut p = Self { words: vec![bits] };
        p.trim();
        p
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    /// Coefficients in ascending degree.
    pub fn from_coeffs<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        Self::from_exponents(
            coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c)
                .map(|(i, _)| i),
        )
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Toggles the coefficient of `x^i`.
    pub fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Ascending coefficient list of length `deg + 1` (empty for zero).
    pub fn coeffs(&self) -> Vec<bool> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    /// `self ^= other * x^shift`.
    fn xor_shifted(&mut self, other: &PolyF2, shift: usize) {
        if other.is_zero() {
            return;
        }
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        let needed = other.words.len() + word_shift + 1;
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + word_shift] ^= w << bit_shift;
            if bit_shift != 0 {
                self.words[i + word_shift + 1] ^= w >> (64 - bit_shift);
            }
        }
        self.trim();
    }

    pub fn shl(&self, k: usize) -> Self {
        let mut out = Self::zero();
        out.xor_shifted(self, k);
        out
    }

    /// Quotient and remainder; the remainder has degree below the divisor's.
    pub fn divmod(&self, divisor: &PolyF2) -> Result<(PolyF2, PolyF2), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = PolyF2::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            quot.flip(rd - dd);
            rem.xor_shifted(divisor, rd - dd);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &PolyF2) -> Result<PolyF2, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &PolyF2) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyF2) -> PolyF2 {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    pub fn square(&self) -> PolyF2 {
        // Over F2 squaring spreads the coefficients: x^i -> x^(2i).
        PolyF2::from_exponents(self.exponents().map(|e| 2 * e))
    }

    pub fn pow(&self, mut e: u64) -> PolyF2 {
        let mut base = self.clone();
        let mut acc = PolyF2::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn mul_mod(&self, other: &PolyF2, modulus: &PolyF2) -> Result<PolyF2, PolyError> {
        (self * other).rem(modulus)
    }

    /// `x^deg(f) * f(1/x)`: the coefficient sequence reversed. Low-order zero
    /// coefficients become leading zeros and are dropped, so `(x^2+x)* = x+1`.
    pub fn reciprocal(&self) -> PolyF2 {
        match self.degree() {
            None => PolyF2::zero(),
            Some(d) => PolyF2::from_exponents(self.exponents().map(|e| d - e)),
        }
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal() == *self
    }

    /// `1 + x + ... + x^(n-1)`, i.e. `(x^n - 1)/(x - 1)`.
    pub fn ideal_polynomial(n: usize) -> PolyF2 {
        PolyF2::from_exponents(0..n)
    }

    /// Reduction modulo `x^n - 1`: exponents are folded mod `n`.
    pub fn reduce_cyclic(&self, n: usize) -> PolyF2 {
        assert!(n > 0, "cyclic length must be positive");
        PolyF2::from_exponents(self.exponents().map(|e| e % n))
    }

    /// Ascending bit string, `"0"` for zero.
    pub fn to_bit_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs()
            .iter()
            .map(|&c| if c { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bits(s: &str) -> Result<PolyF2, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::Polynomial(s.to_string()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(ParseError::Polynomial(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PolyF2::from_coeffs)
    }
}

impl Add<&PolyF2> for &PolyF2 {
    type Output = PolyF2;
    fn add(self, rhs: &PolyF2) -> PolyF2 {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = PolyF2 { words };
        p.trim();
        p
    }
}

impl Add for PolyF2 {
    type Output = PolyF2;
    fn add(self, rhs: PolyF2) -> PolyF2 {
        &self + &rhs
    }
}

impl Mul<&PolyF2> for &PolyF2 {
    type Output = PolyF2;
    fn mul(self, rhs: &PolyF2) -> PolyF2 {
        let (dense, sparse) = if self.weight() >= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = PolyF2::zero();
        for e in sparse.exponents() {
            out.xor_shifted(dense, e);
        }
        out
    }
}

impl Mul for PolyF2 {
    type Output = PolyF2;
    fn mul(self, rhs: PolyF2) -> PolyF2 {
        &self * &rhs
    }
}

/// Degree first, then packed value; used to list factors deterministically.
impl Ord for PolyF2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for PolyF2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Human form, e.g. `1+x+x^3`.
impl fmt::Display for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in self.exponents() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyF2({self})")
    }
}

/// Accepts an ascending bit string (`1101`) or human form (`1+x+x^3`).
impl FromStr for PolyF2 {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !t.is_empty() && t.chars().all(|c| c == '0' || c == '1') {
            return PolyF2::parse_bits(&t);
        }
        if t.is_empty() {
            return Err(ParseError::Polynomial(s.to_string()));
        }
        let mut p = PolyF2::zero();
        for term in t.split('+') {
            let e = match term {
                "0" => continue,
                "1" => 0,
                "x" => 1,
                other => other
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| ParseError::Polynomial(s.to_string()))?,
            };
            p.flip(e);
        }
        Ok(p)
    }
}
