//! F2-linear subspaces of `R^n`, viewed as `F2^(4n)`, kept in reduced row
//! echelon form. The pivot of a row is its lowest set bit and every pivot
//! column is cleared in all other rows, so two spans are equal exactly when
//! their row lists are equal.

use super::word::{packed_len, RingWord};
use super::CodeError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn bit(v: &[u64], i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Reduced row echelon basis over raw bit vectors of a fixed word count.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn reduce(&self, v: &mut [u64]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if bit(v, p) {
                xor_into(v, row);
            }
        }
    }

    /// Returns true if `v` was independent of the current rows.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(p) = lowest_bit(&v) else {
            return false;
        };
        for row in &mut self.rows {
            if bit(row, p) {
                xor_into(row, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

impl Span {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// F2 span of the given words.
    pub fn from_words<'a, I: IntoIterator<Item = &'a RingWord>>(n: usize, words: I) -> Self {
        let mut ech = Echelon::default();
        for w in words {
            assert_eq!(w.len(), n, "word length");
            ech.insert(w.pack());
        }
        Self {
            n,
            rows: ech.rows,
            pivots: ech.pivots,
        }
    }

    /// Smallest ideal of `R[x]/(x^n - 1)` containing `generators`: the F2 span of
    /// `u^a x^j g` over all generators `g`, `a` in 0..4 and `j` in 0..n.
    pub fn ideal<'a, I: IntoIterator<Item = &'a RingWord>>(n: usize, generators: I) -> Self {
        let full = 4 * n;
        let mut ech = Echelon::default();
        'gens: for g in generators {
            assert_eq!(g.len(), n, "generator length");
            let mut shifted = g.clone();
            for _ in 0..n {
                let mut ua = shifted.clone();
                for _ in 0..4 {
                    ech.insert(ua.pack());
                    if ech.rows.len() == full {
                        break 'gens;
                    }
                    ua = ua.scale(crate::ring::RingElement::U);
                }
                shifted = shifted.shift();
            }
        }
        Self {
            n,
            rows: ech.rows,
            pivots: ech.pivots,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension over F2; the span has `2^log2_size` elements.
    pub fn log2_size(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = RingWord> + '_ {
        self.rows.iter().map(|r| RingWord::unpack(r, self.n))
    }

    pub fn contains(&self, w: &RingWord) -> Result<bool, CodeError> {
        if w.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                got: w.len(),
            });
        }
        Ok(self.contains_packed(w.pack()))
    }

    pub(crate) fn contains_packed(&self, mut v: Vec<u64>) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if bit(&v, p) {
                xor_into(&mut v, row);
            }
        }
        v.iter().all(|&w| w == 0)
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.n == other.n && self.rows.iter().all(|r| other.contains_packed(r.clone()))
    }

    /// Intersection by the Zassenhaus construction: reduce rows `[a | a]` and
    /// `[b | 0]`; rows whose left half vanishes carry the intersection on the right.
    pub fn intersect(&self, other: &Span) -> Span {
        assert_eq!(self.n, other.n, "span lengths differ");
        let bits = 4 * self.n;
        let half = packed_len(self.n);
        let total_words = (2 * bits).div_ceil(64);
        let place = |left: &[u64], right: Option<&[u64]>| {
            let mut v = vec![0u64; total_words];
            v[..half].copy_from_slice(left);
            if let Some(right) = right {
                for i in 0..bits {
                    if bit(right, i) {
                        let j = bits + i;
                        v[j / 64] |= 1 << (j % 64);
                    }
                }
            }
            v
        };
        let mut ech = Echelon::default();
        for a in &self.rows {
            ech.insert(place(a, Some(a)));
        }
        for b in &other.rows {
            ech.insert(place(b, None));
        }
        let mut out = Echelon::default();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if p >= bits {
                let mut right = vec![0u64; half];
                for i in 0..bits {
                    if bit(row, bits + i) {
                        right[i / 64] |= 1 << (i % 64);
                    }
                }
                out.insert(right);
            }
        }
        Span {
            n: self.n,
            rows: out.rows,
            pivots: out.pivots,
        }
    }

    /// Every element of the span, in Gray-code order starting from zero.
    pub fn elements(&self, cap: u64) -> Result<Elements<'_>, CodeError> {
        let size = self.size_checked(cap)?;
        Ok(Elements {
            span: self,
            current: vec![0u64; packed_len(self.n)],
            index: 0,
            size,
        })
    }

    fn size_checked(&self, cap: u64) -> Result<u64, CodeError> {
        let k = self.log2_size();
        if k >= 64 || (1u64 << k) > cap {
            return Err(CodeError::CapExceeded { log2_size: k, cap });
        }
        Ok(1u64 << k)
    }

    /// Elements packed into single integers (coordinate `j` in bits `4j..4j+4`),
    /// sorted ascending. Only for `n <= 16`.
    pub fn packed_elements(&self, cap: u64) -> Result<Vec<u64>, CodeError> {
        assert!(self.n <= 16, "packed_elements needs n <= 16");
        let mut out: Vec<u64> = self.elements_raw(cap)?.map(|v| v[0]).collect();
        out.sort_unstable();
        Ok(out)
    }

    fn elements_raw(&self, cap: u64) -> Result<impl Iterator<Item = Vec<u64>> + '_, CodeError> {
        let size = self.size_checked(cap)?;
        let mut current = vec![0u64; packed_len(self.n)];
        Ok((0..size).map(move |i| {
            if i > 0 {
                xor_into(&mut current, &self.rows[i.trailing_zeros() as usize]);
            }
            current.clone()
        }))
    }
}

pub struct Elements<'a> {
    span: &'a Span,
    current: Vec<u64>,
    index: u64,
    size: u64,
}

impl Iterator for Elements<'_> {
    type Item = RingWord;

    fn next(&mut self) -> Option<RingWord> {
        if self.index >= self.size {
            return None;
        }
        if self.index > 0 {
            xor_into(
                &mut self.current,
                &self.span.rows[self.index.trailing_zeros() as usize],
            );
        }
        self.index += 1;
        Some(RingWord::unpack(&self.current, self.span.n))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.size - self.index) as usize;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for Elements<'_> {}
