//! DNA strands and the word-level map from ring words to strands.
//!
//! Strands are always stored 5' to 3', left to right. Text input may carry an
//! explicit orientation (`3'-ACTTAGA-5'`), in which case it is reversed into
//! storage order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

use crate::codes::RingWord;
use crate::error::ParseError;
use crate::ring::{Dinucleotide, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DnaError {
    #[error("strands have mixed lengths ({0} and {1})")]
    MixedLengths(usize, usize),
    #[error("strand length {0} is odd; index-2 quasi-cyclicity needs even length")]
    OddLength(usize),
    #[error("duplicate FASTA label `{0}`")]
    DuplicateLabel(String),
    #[error("{strands} strands but {labels} labels")]
    LabelCount { strands: usize, labels: usize },
    #[error("strand of length {0} is not an image of a ring word (odd length)")]
    NotPairAligned(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Nucleotide {
    A = 0,
    C = 1,
    G = 2,
    T = 3,
}

impl Nucleotide {
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i & 3]
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Nucleotide::A),
            'C' => Some(Nucleotide::C),
            'G' => Some(Nucleotide::G),
            'T' => Some(Nucleotide::T),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        b"ACGT"[self as usize] as char
    }

    /// A<->T, C<->G.
    pub fn complement(self) -> Self {
        Self::ALL[3 - self as usize]
    }

    pub fn is_gc(self) -> bool {
        matches!(self, Nucleotide::C | Nucleotide::G)
    }
}

impl fmt::Display for Nucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Oriented strand, stored 5' to 3'.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnaStrand(Vec<Nucleotide>);

impl DnaStrand {
    pub fn new(letters: Vec<Nucleotide>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Nucleotide] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|n| n.complement()).collect())
    }

    /// Watson-Crick complement: the partner strand read 5' to 3'.
    pub fn wcc(&self) -> Self {
        Self(self.0.iter().rev().map(|n| n.complement()).collect())
    }

    /// Cyclic rotation to the right by `k` positions.
    pub fn rotate_right(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_right(k);
        }
        Self(v)
    }

    /// Fraction of G and C letters; an empty strand has GC content 0.
    pub fn gc_content(&self) -> Ratio<usize> {
        if self.0.is_empty() {
            return Ratio::from_integer(0);
        }
        let gc = self.0.iter().filter(|n| n.is_gc()).count();
        Ratio::new(gc, self.0.len())
    }

    /// Adjacent letter pairs, positions `(i, i+1)`.
    pub fn dinucleotides(&self) -> impl Iterator<Item = Dinucleotide> + '_ {
        self.0.windows(2).map(|w| Dinucleotide(w[0], w[1]))
    }
}

impl fmt::Display for DnaStrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.0 {
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Parses raw letters, or letters wrapped in an orientation marker:
/// `5'-ACGT-3'` is taken as is, `3'-ACGT-5'` is reversed into storage order.
impl FromStr for DnaStrand {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (body, reversed) =
            if let Some(rest) = t.strip_prefix("3'-").or_else(|| t.strip_prefix("3'")) {
                let body = rest.strip_suffix("-5'").or_else(|| rest.strip_suffix("5'"));
                (body.ok_or_else(|| ParseError::Strand(s.to_string()))?, true)
            } else if let Some(rest) = t.strip_prefix("5'-").or_else(|| t.strip_prefix("5'")) {
                let body = rest.strip_suffix("-3'").or_else(|| rest.strip_suffix("3'"));
                (
                    body.ok_or_else(|| ParseError::Strand(s.to_string()))?,
                    false,
                )
            } else {
                (t, false)
            };
        let mut letters = body
            .chars()
            .map(Nucleotide::from_char)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| ParseError::Strand(s.to_string()))?;
        if reversed {
            letters.reverse();
        }
        Ok(Self(letters))
    }
}

/// Concatenation of the pair images of each coordinate: a strand of length `2n`.
pub fn phi_word(w: &RingWord) -> DnaStrand {
    let mut letters = Vec::with_capacity(2 * w.len());
    for x in w.coords() {
        let p = x.phi();
        letters.push(p.0);
        letters.push(p.1);
    }
    DnaStrand(letters)
}

pub fn phi_word_inv(s: &DnaStrand) -> Result<RingWord, DnaError> {
    if !s.len().is_multiple_of(2) {
        return Err(DnaError::NotPairAligned(s.len()));
    }
    Ok(RingWord::new(
        s.0.chunks_exact(2)
            .map(|c| RingElement::phi_inv(Dinucleotide(c[0], c[1])))
            .collect(),
    ))
}

/// `u^2 * w^rc`, coordinatewise. Its image equals the Watson-Crick complement
/// of `phi_word(w)` except at coordinates where `w^rc` holds GC, CG, AA or TT,
/// where multiplication by `u^2` is not a letter swap; see [`exact_wcc_preimage`].
pub fn wcc_preimage(w: &RingWord) -> RingWord {
    RingWord::new(
        w.reverse_complement()
            .coords()
            .iter()
            .map(|x| x.pair_reverse())
            .collect(),
    )
}

/// The unique word whose image is the Watson-Crick complement of `phi_word(w)`.
pub fn exact_wcc_preimage(w: &RingWord) -> RingWord {
    phi_word_inv(&phi_word(w).wcc()).expect("image has even length")
}

/// Whether a set of strands is closed under cyclic shift by two positions.
pub fn is_quasi_cyclic_2<'a, I>(strands: I) -> Result<bool, DnaError>
where
    I: IntoIterator<Item = &'a DnaStrand>,
{
    let set: HashSet<&DnaStrand> = strands.into_iter().collect();
    let mut len = None;
    for s in &set {
        match len {
            None => len = Some(s.len()),
            Some(l) if l != s.len() => return Err(DnaError::MixedLengths(l, s.len())),
            _ => {}
        }
    }
    if let Some(l) = len {
        if l % 2 != 0 {
            return Err(DnaError::OddLength(l));
        }
    }
    Ok(set.iter().all(|s| set.contains(&s.rotate_right(2))))
}

/// Whether a set of strands contains the Watson-Crick complement of each member.
pub fn is_wcc_closed<'a, I>(strands: I) -> bool
where
    I: IntoIterator<Item = &'a DnaStrand>,
{
    let set: HashSet<&DnaStrand> = strands.into_iter().collect();
    set.iter().all(|s| set.contains(&s.wcc()))
}

/// One `>label` line and one sequence line per strand.
pub fn fasta_export<S: AsRef<str>>(
    strands: &[DnaStrand],
    labels: &[S],
) -> Result<String, DnaError> {
    if strands.len() != labels.len() {
        return Err(DnaError::LabelCount {
            strands: strands.len(),
            labels: labels.len(),
        });
    }
    let mut seen = HashSet::new();
    let mut out = String::new();
    for (s, label) in strands.iter().zip(labels) {
        let label = label.as_ref();
        if !seen.insert(label) {
            return Err(DnaError::DuplicateLabel(label.to_string()));
        }
        out.push('>');
        out.push_str(label);
        out.push('\n');
        out.push_str(&s.to_string());
        out.push('\n');
    }
    Ok(out)
}
