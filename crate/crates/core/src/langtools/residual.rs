use std::collections::HashMap;
use std::io::Write;

use crate::automaton::{Alphabet, Word};
use crate::words::words_up_to;

use super::{LangError, LanguageSample};

/// Bounded Myhill–Nerode table: rows are prefixes of length `≤ p`, columns
/// suffixes of length `≤ s`, both in shortlex order.
///
/// Two prefixes with different rows are provably inequivalent, so
/// `distinct_rows` lower-bounds the size of any complete DFA for the
/// language. It is a probe at a fixed bound, not a regularity verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualTable {
    pub alphabet: Alphabet,
    pub p: usize,
    pub s: usize,
    pub prefixes: Vec<Word>,
    pub rows: Vec<Vec<bool>>,
    /// Class id per prefix, numbered by first occurrence.
    pub row_class: Vec<usize>,
    pub distinct_rows: usize,
}

pub fn residual_probe(
    sample: &LanguageSample,
    p: usize,
    s: usize,
) -> Result<ResidualTable, LangError> {
    if p + s > sample.max_len {
        return Err(LangError::BoundsExceedSample {
            need: p + s,
            have: sample.max_len,
        });
    }
    let k = sample.alphabet.len();
    let suffixes: Vec<Word> = words_up_to(k, s).collect();
    let prefixes: Vec<Word> = words_up_to(k, p).collect();
    let rows: Vec<Vec<bool>> = prefixes
        .iter()
        .map(|u| {
            suffixes
                .iter()
                .map(|v| {
                    sample
                        .contains(u.concat(v).letters())
                        .expect("p + s within the sample")
                })
                .collect()
        })
        .collect();
    let mut ids: HashMap<&[bool], usize> = HashMap::new();
    let row_class: Vec<usize> = rows
        .iter()
        .map(|r| {
            let next = ids.len();
            *ids.entry(r.as_slice()).or_insert(next)
        })
        .collect();
    let distinct_rows = ids.len();
    Ok(ResidualTable {
        alphabet: sample.alphabet.clone(),
        p,
        s,
        prefixes,
        rows,
        row_class,
        distinct_rows,
    })
}

/// Packs bits MSB-first into hex digits, zero-padding the last nibble.
fn bits_hex(bits: &[bool]) -> String {
    bits.chunks(4)
        .map(|c| {
            let v = c
                .iter()
                .chain(std::iter::repeat(&false))
                .take(4)
                .fold(0u32, |acc, &b| acc << 1 | u32::from(b));
            char::from_digit(v, 16).expect("nibble")
        })
        .collect()
}

impl ResidualTable {
    /// `consistent with ≤ m residuals up to (p,s)`
    pub fn verdict(&self) -> String {
        format!(
            "consistent with ≤ {} residuals up to ({},{})",
            self.distinct_rows, self.p, self.s
        )
    }

    /// CSV with columns `prefix,row_bits_hex,row_class_id`; row bits follow
    /// suffix shortlex order.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["prefix", "row_bits_hex", "row_class_id"])?;
        for ((u, row), class) in self.prefixes.iter().zip(&self.rows).zip(&self.row_class) {
            w.write_record([
                u.display(&self.alphabet).to_string(),
                bits_hex(row),
                class.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Machine;
    use crate::engines::Engine;
    use crate::langtools::families::lab;
    use crate::langtools::{enumerate, DEFAULT_ENUMERATION_CAP};

    fn sample(engine: Engine, max_len: usize) -> LanguageSample {
        enumerate(
            &Machine::Dfa(lab()),
            engine,
            max_len,
            DEFAULT_ENUMERATION_CAP,
        )
        .unwrap()
    }

    #[test]
    fn lab_rows_grow_with_p() {
        let s = sample(Engine::Owj, 12);
        let t = residual_probe(&s, 5, 6).unwrap();
        // count differences -5..=5 are all told apart by suffixes of length ≤ 6
        assert_eq!(t.distinct_rows, 11);
        let counts: Vec<usize> = (0..=5)
            .map(|p| residual_probe(&s, p, 6).unwrap().distinct_rows)
            .collect();
        assert!(counts.windows(2).all(|w| w[0] < w[1]), "{counts:?}");
    }

    #[test]
    fn ab_star_control_stays_small() {
        let s = sample(Engine::Classical, 10);
        for p in 0..=5 {
            assert!(residual_probe(&s, p, 10 - p).unwrap().distinct_rows <= 3);
        }
    }

    #[test]
    fn empty_prefix_only() {
        let s = sample(Engine::Owj, 6);
        assert_eq!(residual_probe(&s, 0, 6).unwrap().distinct_rows, 1);
    }

    #[test]
    fn bounds_checked() {
        let s = sample(Engine::Owj, 6);
        assert_eq!(
            residual_probe(&s, 4, 3),
            Err(LangError::BoundsExceedSample { need: 7, have: 6 })
        );
    }

    #[test]
    fn hex_packing() {
        assert_eq!(bits_hex(&[true, false, false, false]), "8");
        assert_eq!(bits_hex(&[true, true, true, true, true]), "f8");
        assert_eq!(bits_hex(&[]), "");
    }

    #[test]
    fn csv_rows() {
        let s = sample(Engine::Owj, 4);
        let t = residual_probe(&s, 1, 1).unwrap();
        // suffixes ε, a, b; prefixes ε, a, b
        assert_eq!(
            t.to_csv_string(),
            "prefix,row_bits_hex,row_class_id\n,8,0\na,2,1\nb,4,2\n"
        );
        assert_eq!(t.verdict(), "consistent with ≤ 3 residuals up to (1,1)");
    }
}
