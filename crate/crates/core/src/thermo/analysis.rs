//! Code-level screening: self-similarity, minimum stem distance, the energy
//! bound `s - d`, and reverse-complement fixed points.

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::codes::{CyclicCodeR, RingWord, Span};
use crate::dna::phi_word;
use crate::scalar::Scalar;

use super::stem::{letter_codes, similarity_codes};
use super::{StemWeightTable, ThermoError};

#[derive(Clone, Debug, PartialEq)]
pub struct StemReport<F> {
    pub code_id: String,
    pub n: usize,
    pub log2_size: usize,
    /// Maximum self-similarity of a codeword image.
    pub s: F,
    /// Minimum stem distance over ordered pairs of distinct codewords; `None`
    /// when the code has a single word.
    pub d: Option<F>,
    /// `s - d`.
    pub energy_bound: Option<F>,
    /// Maximum hybridization energy over all ordered pairs (including `x = y`).
    pub max_energy: F,
    /// Ordered pairs whose hybridization energy exceeds `s - d`.
    pub energy_bound_violations: u64,
    /// Codewords with `w = w^rc`.
    pub rc_fixed_points: u64,
    /// Closed under reverse complement; `None` for bare subspaces.
    pub reverse_complement: Option<bool>,
}

impl<F: Scalar> StemReport<F> {
    /// Reverse-complement closed, no fixed points, and at least two words.
    pub fn is_dna_code(&self) -> bool {
        self.reverse_complement == Some(true) && self.rc_fixed_points == 0 && self.d.is_some()
    }
}

/// Four-decimal rendering used in every JSON report.
pub fn fixed4<F: Scalar>(v: F) -> String {
    let x = v.to_f64().unwrap_or(f64::NAN);
    // avoid "-0.0000"
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn raw<F: Scalar>(v: F) -> Box<RawValue> {
    RawValue::from_string(fixed4(v)).expect("decimal literal is valid JSON")
}

fn raw_opt<F: Scalar>(v: Option<F>) -> Option<Box<RawValue>> {
    v.map(raw)
}

impl<F: Scalar> Serialize for StemReport<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("StemReport", 11)?;
        st.serialize_field("code_id", &self.code_id)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("log2_size", &self.log2_size)?;
        st.serialize_field("s", &raw(self.s))?;
        st.serialize_field("d", &raw_opt(self.d))?;
        st.serialize_field("energy_bound", &raw_opt(self.energy_bound))?;
        st.serialize_field("max_energy", &raw(self.max_energy))?;
        st.serialize_field("energy_bound_violations", &self.energy_bound_violations)?;
        st.serialize_field("rc_fixed_points", &self.rc_fixed_points)?;
        st.serialize_field("reverse_complement", &self.reverse_complement)?;
        st.serialize_field("dna_code", &self.is_dna_code())?;
        st.end()
    }
}

struct Prepared {
    letters: Vec<Vec<u8>>,
    /// Letters of the Watson-Crick complement of each image.
    wcc_letters: Vec<Vec<u8>>,
    rc_fixed_points: u64,
}

fn prepare(words: &[RingWord]) -> Prepared {
    let mut letters = Vec::with_capacity(words.len());
    let mut wcc_letters = Vec::with_capacity(words.len());
    let mut rc_fixed_points = 0;
    for w in words {
        let strand = phi_word(w);
        letters.push(letter_codes(&strand));
        wcc_letters.push(letter_codes(&strand.wcc()));
        if w.reverse_complement() == *w {
            rc_fixed_points += 1;
        }
    }
    Prepared {
        letters,
        wcc_letters,
        rc_fixed_points,
    }
}

/// Screens an explicit list of distinct words of length `n`.
pub fn analyze_words<F: Scalar>(
    code_id: String,
    n: usize,
    words: &[RingWord],
    reverse_complement: Option<bool>,
    tbl: &StemWeightTable<F>,
) -> StemReport<F> {
    let p = prepare(words);
    let selfsim: Vec<F> = p
        .letters
        .iter()
        .map(|x| similarity_codes(x, x, tbl))
        .collect();
    let s = selfsim.iter().copied().fold(F::zero(), F::max);

    // min over ordered pairs x != y of S(x,x) - S(x,y)
    let d = (0..words.len())
        .into_par_iter()
        .filter_map(|i| {
            let x = &p.letters[i];
            (0..words.len())
                .filter(|&j| j != i)
                .map(|j| selfsim[i] - similarity_codes(x, &p.letters[j], tbl))
                .reduce(F::min)
        })
        .reduce_with(F::min);
    let energy_bound = d.map(|d| s - d);

    // E(x, y) = S(x, wcc(y)) over every ordered pair
    let (max_energy, violations) = (0..words.len())
        .into_par_iter()
        .map(|i| {
            let x = &p.letters[i];
            let mut max_e = F::zero();
            let mut bad = 0u64;
            for y_wcc in &p.wcc_letters {
                let e = similarity_codes(x, y_wcc, tbl);
                max_e = max_e.max(e);
                if energy_bound.is_some_and(|b| e > b) {
                    bad += 1;
                }
            }
            (max_e, bad)
        })
        .reduce(|| (F::zero(), 0), |a, b| (a.0.max(b.0), a.1 + b.1));

    StemReport {
        code_id,
        n,
        log2_size: words.len().trailing_zeros() as usize,
        s,
        d,
        energy_bound,
        max_energy,
        energy_bound_violations: violations,
        rc_fixed_points: p.rc_fixed_points,
        reverse_complement,
    }
}

/// Full report for a chain code; fails if the code has more than `cap` words.
pub fn analyze_code<F: Scalar>(
    code: &CyclicCodeR,
    tbl: &StemWeightTable<F>,
    cap: u64,
) -> Result<StemReport<F>, ThermoError> {
    let words: Vec<RingWord> = code.codewords(cap)?.collect();
    Ok(analyze_words(
        code.id(),
        code.n(),
        &words,
        Some(code.is_reverse_complement()),
        tbl,
    ))
}

/// Report for an arbitrary F2-linear subspace, such as a `(1+u^2)` subcode.
pub fn analyze_span<F: Scalar>(
    id: String,
    span: &Span,
    tbl: &StemWeightTable<F>,
    cap: u64,
) -> Result<StemReport<F>, ThermoError> {
    let words: Vec<RingWord> = span.elements(cap)?.collect();
    let rc = words
        .iter()
        .all(|w| span.contains(&w.reverse_complement()).unwrap_or(false));
    Ok(analyze_words(id, span.n(), &words, Some(rc), tbl))
}
