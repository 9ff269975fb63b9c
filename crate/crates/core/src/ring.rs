//! Arithmetic in the 16-element chain ring `R = F2[u]/(u^4 - 1)` and the
//! fixed bijection between ring elements and ordered nucleotide pairs.
//!
//! An element `a0 + a1*u + a2*u^2 + a3*u^3` is stored as the nibble
//! `a0 | a1 << 1 | a2 << 2 | a3 << 3`. Addition is XOR; multiplying by `u`
//! rotates the nibble left by one because `u^4 = 1`.
//!
//! The maximal ideal is `<1+u>` and `(1+u)^4 = 0`, so the ideals of `R` form
//! the chain `0 < <(1+u)^3> < <(1+u)^2> < <1+u> < R`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::dna::Nucleotide;
use crate::error::ParseError;

/// Element of `F2[u]/(u^4 - 1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement(u8);

impl RingElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const U: Self = Self(0b0010);
    /// `1 + u`, generator of the maximal ideal.
    pub const ONE_PLUS_U: Self = Self(0b0011);
    /// `1 + u^2 = (1 + u)^2`.
    pub const ONE_PLUS_U2: Self = Self(0b0101);
    /// `1 + u + u^2 + u^3 = (1 + u)^3`; adding it complements the nucleotide pair.
    pub const ALL_ONES: Self = Self(0b1111);

    /// Number of elements of the ring.
    pub const ORDER: usize = 16;

    /// Builds an element from its canonical encoding; only the low nibble is used.
    pub const fn from_bits(bits: u8) -> Self {
        Self(bits & 0x0f)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn from_coeffs(coeffs: [bool; 4]) -> Self {
        let mut bits = 0u8;
        for (i, &c) in coeffs.iter().enumerate() {
            if c {
                bits |= 1 << i;
            }
        }
        Self(bits)
    }

    pub fn coeffs(self) -> [bool; 4] {
        [0, 1, 2, 3].map(|i| self.0 >> i & 1 == 1)
    }

    /// All 16 elements in encoding order.
    pub fn all() -> impl Iterator<Item = Self> + Clone {
        (0u8..16).map(Self)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplication by `u^k`.
    pub fn mul_u_pow(self, k: u32) -> Self {
        let k = k % 4;
        Self(((self.0 << k) | (self.0 >> ((4 - k) % 4))) & 0x0f)
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Watson-Crick complement of the associated pair: `x + (1 + u + u^2 + u^3)`.
    pub fn complement(self) -> Self {
        Self(self.0 ^ 0x0f)
    }

    /// `u^2 * x`. On the pair image this swaps the two letters for 12 of the 16
    /// elements; the exceptions are GC and CG (fixed) and AA, TT (exchanged).
    pub fn pair_reverse(self) -> Self {
        self.mul_u_pow(2)
    }

    /// Largest `t` with `x` in `<(1+u)^t>`; the zero element has valuation 4.
    pub fn u1_valuation(self) -> u32 {
        if self.0 == 0 {
            return 4;
        }
        // (1+u)^4 = u^4 + 1, so membership in <(1+u)^t> is plain divisibility
        // of the nibble polynomial by (1+u)^t. (1+u) divides iff the parity is even.
        let mut value = self.0 as u32;
        let mut t = 0;
        while parity(value) == 0 {
            value = div_by_one_plus_u(value);
            t += 1;
        }
        t
    }

    pub fn is_unit(self) -> bool {
        self.u1_valuation() == 0
    }

    /// Image in `F2 = R/<1+u>`: the parity of the coefficients.
    pub fn residue(self) -> bool {
        parity(self.0 as u32) == 1
    }

    /// The dinucleotide assigned to this element.
    pub fn phi(self) -> Dinucleotide {
        PHI_TABLE[self.0 as usize]
    }

    pub fn phi_inv(pair: Dinucleotide) -> Self {
        PHI_INV[pair.index()]
    }
}

fn parity(v: u32) -> u32 {
    v.count_ones() & 1
}

/// Exact division of a polynomial over F2 (as bits) by `1 + u`; caller guarantees divisibility.
fn div_by_one_plus_u(mut v: u32) -> u32 {
    let mut q = 0;
    while v != 0 {
        let deg = 31 - v.leading_zeros();
        if deg == 0 {
            break;
        }
        q |= 1 << (deg - 1);
        v ^= 0b11 << (deg - 1);
    }
    q
}

// characteristic 2: addition and subtraction are XOR
#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Add for RingElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl AddAssign for RingElement {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Sub for RingElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl Neg for RingElement {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Mul for RingElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut acc = 0u8;
        for k in 0..4 {
            if rhs.0 >> k & 1 == 1 {
                acc ^= self.mul_u_pow(k).0;
            }
        }
        Self(acc)
    }
}

impl MulAssign for RingElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Zero for RingElement {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for RingElement {
    fn one() -> Self {
        Self::ONE
    }
}

/// Hex digit of the canonical encoding.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:X}", self.0)
    }
}

impl RingElement {
    /// Polynomial form such as `1+u+u^3`; zero renders as `0`.
    pub fn to_poly_string(self) -> String {
        if self.0 == 0 {
            return "0".to_string();
        }
        let terms: Vec<&str> = ["1", "u", "u^2", "u^3"]
            .iter()
            .enumerate()
            .filter(|(i, _)| self.0 >> i & 1 == 1)
            .map(|(_, t)| *t)
            .collect();
        terms.join("+")
    }
}

/// Accepts a single hex digit `0`-`F` or a polynomial in `u` such as `1+u+u^3`.
impl FromStr for RingElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.len() == 1 {
            if let Some(d) = s.chars().next().and_then(|c| c.to_digit(16)) {
                return Ok(Self(d as u8));
            }
        }
        if s.is_empty() {
            return Err(ParseError::RingElement(s.to_string()));
        }
        let mut bits = 0u8;
        for term in s.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            let exp = match term.as_str() {
                "0" => continue,
                "1" => 0,
                "u" => 1,
                t => t
                    .strip_prefix("u^")
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(|| ParseError::RingElement(s.to_string()))?,
            };
            bits ^= Self::ONE.mul_u_pow(exp).0;
        }
        Ok(Self(bits))
    }
}

/// Ordered pair of nucleotides, the image of one ring element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dinucleotide(pub Nucleotide, pub Nucleotide);

impl Dinucleotide {
    /// Index `4*first + second` with `A < C < G < T`.
    pub fn index(self) -> usize {
        self.0.index() * 4 + self.1.index()
    }

    pub fn from_index(i: usize) -> Self {
        Dinucleotide(Nucleotide::from_index(i / 4), Nucleotide::from_index(i % 4))
    }

    pub fn all() -> impl Iterator<Item = Self> {
        (0..16).map(Self::from_index)
    }

    pub fn swapped(self) -> Self {
        Dinucleotide(self.1, self.0)
    }

    /// Letterwise Watson-Crick complement (no reversal).
    pub fn complement(self) -> Self {
        Dinucleotide(self.0.complement(), self.1.complement())
    }

    /// Reverse complement: the pair read on the partner strand, 5' to 3'.
    pub fn reverse_complement(self) -> Self {
        Dinucleotide(self.1.complement(), self.0.complement())
    }
}

impl fmt::Display for Dinucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl FromStr for Dinucleotide {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut it = s.trim().chars();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let a = Nucleotide::from_char(a)
                    .ok_or_else(|| ParseError::Dinucleotide(s.to_string()))?;
                let b = Nucleotide::from_char(b)
                    .ok_or_else(|| ParseError::Dinucleotide(s.to_string()))?;
                Ok(Dinucleotide(a, b))
            }
            _ => Err(ParseError::Dinucleotide(s.to_string())),
        }
    }
}

use Nucleotide::{A, C, G, T};

/// Pair assigned to each encoding 0..16.
const PHI_TABLE: [Dinucleotide; 16] = [
    Dinucleotide(G, G), // 0
    Dinucleotide(G, T), // 1
    Dinucleotide(A, G), // u
    Dinucleotide(A, T), // 1+u
    Dinucleotide(T, G), // u^2
    Dinucleotide(G, C), // 1+u^2
    Dinucleotide(A, A), // u+u^2
    Dinucleotide(C, T), // 1+u+u^2
    Dinucleotide(G, A), // u^3
    Dinucleotide(T, T), // 1+u^3
    Dinucleotide(C, G), // u+u^3
    Dinucleotide(A, C), // 1+u+u^3
    Dinucleotide(T, A), // u^2+u^3
    Dinucleotide(T, C), // 1+u^2+u^3
    Dinucleotide(C, A), // u+u^2+u^3
    Dinucleotide(C, C), // 1+u+u^2+u^3
];

const PHI_INV: [RingElement; 16] = invert_phi();

const fn invert_phi() -> [RingElement; 16] {
    let mut inv = [RingElement(0); 16];
    let mut x = 0;
    while x < 16 {
        let p = PHI_TABLE[x];
        inv[p.0 as usize * 4 + p.1 as usize] = RingElement(x as u8);
        x += 1;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    // Multiplication table from first principles: expand both operands as
    // exponent sets and reduce exponents mod 4, independent of `Mul`.
    fn schoolbook_mul(x: u8, y: u8) -> u8 {
        let mut acc = 0u8;
        for i in 0..4 {
            for j in 0..4 {
                if x >> i & 1 == 1 && y >> j & 1 == 1 {
                    acc ^= 1 << ((i + j) % 4);
                }
            }
        }
        acc
    }

    #[test]
    fn add_examples() {
        assert_eq!(r("1+u") + r("u+u^3"), r("1+u^3"));
        for x in RingElement::all() {
            assert_eq!(x + x, RingElement::ZERO);
            assert_eq!(RingElement::ZERO + x, x);
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(r("u^2") * r("1+u"), r("u^2+u^3"));
        assert_eq!(r("u") * r("u^3"), RingElement::ONE);
        assert_eq!(RingElement::ONE_PLUS_U.pow(4), RingElement::ZERO);
        let sq = RingElement::ONE_PLUS_U * RingElement::ONE_PLUS_U;
        assert_eq!(sq * sq, RingElement::ZERO);
    }

    #[test]
    fn mul_matches_schoolbook_table() {
        for x in 0..16u8 {
            for y in 0..16u8 {
                let got = RingElement::from_bits(x) * RingElement::from_bits(y);
                assert_eq!(got.bits(), schoolbook_mul(x, y), "{x} * {y}");
            }
        }
        assert_eq!(schoolbook_mul(0b11, 0b11), 0b101);
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in RingElement::all() {
            assert_eq!(x * RingElement::ONE, x);
            for y in RingElement::all() {
                assert_eq!(x * y, y * x);
                assert_eq!(x + y, y + x);
                for z in RingElement::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(RingElement::ZERO.complement(), r("1+u+u^2+u^3"));
        assert_eq!(RingElement::ZERO.phi().to_string(), "GG");
        assert_eq!(RingElement::ZERO.complement().phi().to_string(), "CC");
        assert_eq!(r("1+u").complement(), r("u^2+u^3"));
        assert_eq!(r("1+u").phi().to_string(), "AT");
        assert_eq!(r("1+u").complement().phi().to_string(), "TA");
        for x in RingElement::all() {
            assert_eq!(x.complement().complement(), x);
            assert_eq!(x + x.complement(), RingElement::ALL_ONES);
            assert_eq!(x.complement().phi(), x.phi().complement());
        }
    }

    #[test]
    fn pair_reverse_examples() {
        assert_eq!(r("1+u").pair_reverse(), r("u^2+u^3"));
        assert_eq!(RingElement::ONE.pair_reverse(), r("u^2"));
        assert_eq!(RingElement::ONE.phi().to_string(), "GT");
        assert_eq!(r("u^2").phi().to_string(), "TG");
        for x in RingElement::all() {
            assert_eq!(x.pair_reverse().pair_reverse(), x);
        }
        // u^2 fixes GC and CG, and exchanges AA with TT.
        let exceptions: Vec<String> = RingElement::all()
            .filter(|x| x.pair_reverse().phi() != x.phi().swapped())
            .map(|x| x.phi().to_string())
            .collect();
        assert_eq!(exceptions, ["GC", "AA", "TT", "CG"]);
        assert_eq!(r("1+u^2").pair_reverse(), r("1+u^2"));
    }

    #[test]
    fn phi_table_rows() {
        let rows = [
            ("GG", "0"),
            ("AT", "1+u"),
            ("GT", "1"),
            ("CT", "1+u+u^2"),
            ("CC", "1+u+u^2+u^3"),
            ("TA", "u^2+u^3"),
            ("TG", "u^2"),
            ("TC", "1+u^2+u^3"),
            ("GC", "1+u^2"),
            ("AA", "u+u^2"),
            ("AC", "1+u+u^3"),
            ("AG", "u"),
            ("CG", "u+u^3"),
            ("TT", "1+u^3"),
            ("CA", "u+u^2+u^3"),
            ("GA", "u^3"),
        ];
        for (pair, poly) in rows {
            let x = r(poly);
            assert_eq!(x.phi().to_string(), pair);
            assert_eq!(RingElement::phi_inv(pair.parse().unwrap()), x);
        }
        for x in RingElement::all() {
            assert_eq!(RingElement::phi_inv(x.phi()), x);
        }
        for p in Dinucleotide::all() {
            assert_eq!(RingElement::phi_inv(p).phi(), p);
        }
    }

    #[test]
    fn phi_inv_rejects_bad_pairs() {
        assert!("GN".parse::<Dinucleotide>().is_err());
        assert!("GGG".parse::<Dinucleotide>().is_err());
        assert!("".parse::<Dinucleotide>().is_err());
    }

    // Membership in <(1+u)^t> by brute force: x = (1+u)^t * y for some y.
    fn ideal_members(t: u32) -> Vec<RingElement> {
        let g = RingElement::ONE_PLUS_U.pow(t);
        let mut v: Vec<_> = RingElement::all().map(|y| g * y).collect();
        v.sort();
        v.dedup();
        v
    }

    #[test]
    fn ideal_chain_sizes_and_valuation() {
        for t in 0..=4u32 {
            assert_eq!(ideal_members(t).len(), 1 << (4 - t));
        }
        for x in RingElement::all() {
            let expected = (0..=4u32)
                .rev()
                .find(|&t| ideal_members(t).contains(&x))
                .unwrap();
            assert_eq!(
                x.u1_valuation(),
                expected,
                "valuation of {}",
                x.to_poly_string()
            );
        }
        assert_eq!(RingElement::ZERO.u1_valuation(), 4);
        assert_eq!(RingElement::ONE.u1_valuation(), 0);
        assert_eq!(r("1+u^2").u1_valuation(), 2);
        assert_eq!(RingElement::ONE_PLUS_U.pow(2), r("1+u^2"));
    }

    #[test]
    fn one_plus_u2_multiples_are_gc_pairs() {
        let mut pairs: Vec<String> = RingElement::all()
            .map(|y| (RingElement::ONE_PLUS_U2 * y).phi().to_string())
            .collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs, ["CC", "CG", "GC", "GG"]);
    }

    #[test]
    fn textual_forms() {
        for x in RingElement::all() {
            assert_eq!(x.to_string().parse::<RingElement>().unwrap(), x);
            assert_eq!(x.to_poly_string().parse::<RingElement>().unwrap(), x);
        }
        assert_eq!(r("F"), RingElement::ALL_ONES);
        assert_eq!(r("b"), r("1+u+u^3"));
        assert_eq!(r("u^4"), RingElement::ONE);
        assert_eq!(RingElement::ALL_ONES.to_string(), "F");
        assert!("x".parse::<RingElement>().is_err());
        assert!("1+v".parse::<RingElement>().is_err());
    }
}
