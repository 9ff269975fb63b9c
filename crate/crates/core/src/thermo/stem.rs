//! Additive stem similarity, stem distance, and hybridization energy.

use crate::codes::RingWord;
use crate::dna::{phi_word, DnaStrand};
use crate::scalar::Scalar;

use super::{StemWeightTable, ThermoError};

fn check_lengths(x: &DnaStrand, y: &DnaStrand) -> Result<(), ThermoError> {
    if x.len() != y.len() {
        return Err(ThermoError::LengthMismatch(x.len(), y.len()));
    }
    Ok(())
}

/// Letter indices of a strand, the form the inner loops work on.
pub(crate) fn letter_codes(s: &DnaStrand) -> Vec<u8> {
    s.letters().iter().map(|n| n.index() as u8).collect()
}

/// Sum of `w(x_i x_{i+1})` over positions where both strands agree on `i` and `i+1`.
#[inline]
pub(crate) fn similarity_codes<F: Scalar>(x: &[u8], y: &[u8], tbl: &StemWeightTable<F>) -> F {
    let mut acc = F::zero();
    let mut prev_match = false;
    for i in 0..x.len() {
        let m = x[i] == y[i];
        if m && prev_match {
            acc = acc + tbl.weight_idx(x[i - 1], x[i]);
        }
        prev_match = m;
    }
    acc
}

pub fn stem_similarity<F: Scalar>(
    x: &DnaStrand,
    y: &DnaStrand,
    tbl: &StemWeightTable<F>,
) -> Result<F, ThermoError> {
    check_lengths(x, y)?;
    Ok(similarity_codes(&letter_codes(x), &letter_codes(y), tbl))
}

/// `S(x,x) - S(x,y)`. Zero on the diagonal, nonnegative, not symmetric in general.
pub fn stem_distance<F: Scalar>(
    x: &DnaStrand,
    y: &DnaStrand,
    tbl: &StemWeightTable<F>,
) -> Result<F, ThermoError> {
    check_lengths(x, y)?;
    let (xc, yc) = (letter_codes(x), letter_codes(y));
    Ok(similarity_codes(&xc, &xc, tbl) - similarity_codes(&xc, &yc, tbl))
}

/// Stem distance between the strand images of two ring words.
pub fn stem_distance_ring<F: Scalar>(
    x: &RingWord,
    y: &RingWord,
    tbl: &StemWeightTable<F>,
) -> Result<F, ThermoError> {
    stem_distance(&phi_word(x), &phi_word(y), tbl)
}

/// `S(x, y^rc)`: similarity of `x` with the Watson-Crick complement of `y`.
pub fn hybridization_energy<F: Scalar>(
    x: &DnaStrand,
    y: &DnaStrand,
    tbl: &StemWeightTable<F>,
) -> Result<F, ThermoError> {
    check_lengths(x, y)?;
    stem_similarity(x, &y.wcc(), tbl)
}
