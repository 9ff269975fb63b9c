//! Nearest-neighbor stacked-pair parameters and the derived weight table.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

use serde::Deserialize;

use crate::ring::Dinucleotide;
use crate::scalar::Scalar;

use super::ThermoError;

/// Stacked-pair parameters at 1 M NaCl: (5'->3' pair, dH kcal/mol, dS cal/(mol K), printed dG at 310 K).
/// One row per reverse-complement class, keyed by the left-hand pair.
pub const STACKED_PAIRS: [(&str, f64, f64, f64); 10] = [
    ("AA", -7.9, -22.2, -1.02),
    ("AC", -8.4, -22.4, -1.46),
    ("AG", -7.8, -21.0, -1.29),
    ("AT", -7.2, -20.4, -0.88),
    ("CA", -8.5, -22.7, -1.46),
    ("CC", -8.0, -19.9, -1.83),
    ("CG", -10.6, -27.2, -2.17),
    ("GA", -8.2, -22.2, -1.32),
    ("GC", -9.8, -24.4, -2.24),
    ("TA", -7.2, -21.3, -0.60),
];

pub const DEFAULT_TEMPERATURE: f64 = 310.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    UserFile(PathBuf),
}

/// Enthalpy and entropy for stacked pairs, one entry per reverse-complement class.
#[derive(Clone, Debug, PartialEq)]
pub struct NearestNeighborParams<F> {
    /// Keyed by the class representative (the smaller of a pair and its reverse complement).
    entries: BTreeMap<Dinucleotide, (F, F)>,
    provenance: Provenance,
}

fn class_key(d: Dinucleotide) -> Dinucleotide {
    d.min(d.reverse_complement())
}

/// The 10 reverse-complement classes of the 16 dinucleotides.
pub fn rc_classes() -> Vec<Dinucleotide> {
    let mut v: Vec<_> = Dinucleotide::all().map(class_key).collect();
    v.sort();
    v.dedup();
    v
}

#[derive(Deserialize)]
struct CsvRow {
    dinucleotide: String,
    #[serde(alias = "dH", alias = "delta_h", alias = "dh")]
    delta_h: f64,
    #[serde(alias = "dS", alias = "delta_s", alias = "ds")]
    delta_s: f64,
}

impl<F: Scalar> NearestNeighborParams<F> {
    pub fn builtin() -> Self {
        let rows = STACKED_PAIRS
            .iter()
            .map(|(p, h, s, _)| (p.parse().expect("builtin pair"), F::lit(*h), F::lit(*s)));
        Self::from_rows(rows, Provenance::Builtin).expect("builtin table is complete")
    }

    /// Collects rows keyed by any member of a class; a class given twice must agree.
    pub fn from_rows<I>(rows: I, provenance: Provenance) -> Result<Self, ThermoError>
    where
        I: IntoIterator<Item = (Dinucleotide, F, F)>,
    {
        let mut entries = BTreeMap::new();
        for (pair, dh, ds) in rows {
            let key = class_key(pair);
            if let Some(&(h0, s0)) = entries.get(&key) {
                if (h0, s0) != (dh, ds) {
                    return Err(ThermoError::ConflictingClass(pair.to_string()));
                }
            }
            entries.insert(key, (dh, ds));
        }
        for class in rc_classes() {
            if !entries.contains_key(&class) {
                return Err(ThermoError::MissingPair(class.to_string()));
            }
        }
        Ok(Self {
            entries,
            provenance,
        })
    }

    /// CSV with a header and columns `dinucleotide, delta_h, delta_s`
    /// (kcal/mol and cal/(mol K)). The pair column may read `AA` or `AA/TT`.
    pub fn from_csv<R: Read>(reader: R, provenance: Provenance) -> Result<Self, ThermoError> {
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut rows = Vec::new();
        for rec in rdr.deserialize::<CsvRow>() {
            let rec = rec.map_err(|e| ThermoError::Csv(e.to_string()))?;
            let key = rec.dinucleotide.split('/').next().unwrap_or("");
            let pair: Dinucleotide = key
                .parse()
                .map_err(|_| ThermoError::Csv(format!("bad pair `{}`", rec.dinucleotide)))?;
            rows.push((pair, F::lit(rec.delta_h), F::lit(rec.delta_s)));
        }
        Self::from_rows(rows, provenance)
    }

    pub fn get(&self, pair: Dinucleotide) -> (F, F) {
        self.entries[&class_key(pair)]
    }

    /// `dG = dH - T dS / 1000` in kcal/mol (dS is in cal/(mol K)).
    pub fn delta_g(&self, pair: Dinucleotide, temperature: F) -> F {
        let (dh, ds) = self.get(pair);
        dh - temperature * ds / F::lit(1000.0)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// Nonnegative weight for each of the 16 stacked dinucleotides.
#[derive(Clone, Debug, PartialEq)]
pub struct StemWeightTable<F> {
    temperature: F,
    weights: [F; 16],
    provenance: Provenance,
}

/// Weights are `|dH - T dS / 1000|`. Magnitudes keep every weight nonnegative,
/// which the similarity bound `S(x,y) <= S(x,x)` relies on.
pub fn build_weight_table<F: Scalar>(
    params: &NearestNeighborParams<F>,
    temperature: F,
) -> Result<StemWeightTable<F>, ThermoError> {
    if temperature <= F::zero() || !temperature.is_finite() {
        return Err(ThermoError::BadTemperature(
            temperature.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let mut weights = [F::zero(); 16];
    for pair in Dinucleotide::all() {
        weights[pair.index()] = params.delta_g(pair, temperature).abs();
    }
    Ok(StemWeightTable {
        temperature,
        weights,
        provenance: params.provenance().clone(),
    })
}

impl<F: Scalar> StemWeightTable<F> {
    /// Builtin parameters at 310 K.
    pub fn builtin() -> Self {
        build_weight_table(
            &NearestNeighborParams::builtin(),
            F::lit(DEFAULT_TEMPERATURE),
        )
        .expect("builtin temperature is positive")
    }

    /// Table from explicit weights; they must be nonnegative and reverse-complement symmetric.
    pub fn from_weights(
        weights: [F; 16],
        temperature: F,
        provenance: Provenance,
    ) -> Result<Self, ThermoError> {
        for pair in Dinucleotide::all() {
            let w = weights[pair.index()];
            if w < F::zero() || w.is_nan() {
                return Err(ThermoError::NegativeWeight(pair.to_string()));
            }
            if w != weights[pair.reverse_complement().index()] {
                return Err(ThermoError::ConflictingClass(pair.to_string()));
            }
        }
        Ok(Self {
            temperature,
            weights,
            provenance,
        })
    }

    pub fn weight(&self, pair: Dinucleotide) -> F {
        self.weights[pair.index()]
    }

    /// Weight by letter indices (A=0, C=1, G=2, T=3).
    #[inline]
    pub(crate) fn weight_idx(&self, a: u8, b: u8) -> F {
        self.weights[(a as usize) * 4 + b as usize]
    }

    pub fn temperature(&self) -> F {
        self.temperature
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_rc_symmetric(&self) -> bool {
        Dinucleotide::all().all(|p| self.weight(p) == self.weight(p.reverse_complement()))
    }
}
