//! Language-level tooling over bounded windows `Σ^{≤n}`.

pub mod families;
mod minimize;
mod residual;
mod subset;

use std::io::Write;

use rayon::prelude::*;
use thiserror::Error;

use crate::automaton::{Alphabet, Machine, Word};
use crate::engines::{accepts, Engine, EngineError};
use crate::words::{count_up_to, nth_word, shortlex_index, words_up_to};

pub use families::{gen_family, Family, FamilyError};
pub use minimize::minimize;
pub use residual::{residual_probe, ResidualTable};
pub use subset::{subset_construction, DEFAULT_SUBSET_CAP};

/// Default limit on words per enumeration call.
pub const DEFAULT_ENUMERATION_CAP: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LangError {
    #[error("window Σ^≤{max_len} holds more than {cap} words")]
    CapExceeded { max_len: usize, cap: u64 },
    #[error("machines have different alphabets")]
    AlphabetMismatch,
    #[error("p + s = {need} exceeds the sample's max length {have}")]
    BoundsExceedSample { need: usize, have: usize },
    #[error("subset construction exceeded {cap} states")]
    StateCapExceeded { cap: usize },
    #[error("automaton is not complete")]
    NotComplete,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Membership of every word of length at most `max_len`, in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageSample {
    pub alphabet: Alphabet,
    pub max_len: usize,
    pub membership: Vec<bool>,
}

impl LanguageSample {
    /// Membership of `w`, or `None` if it lies outside the window.
    pub fn contains(&self, w: &[usize]) -> Option<bool> {
        if w.len() > self.max_len || w.iter().any(|&s| s >= self.alphabet.len()) {
            return None;
        }
        Some(self.membership[shortlex_index(self.alphabet.len(), w) as usize])
    }

    pub fn words(&self) -> impl Iterator<Item = (Word, bool)> + '_ {
        words_up_to(self.alphabet.len(), self.max_len).zip(self.membership.iter().copied())
    }

    pub fn accepted(&self) -> impl Iterator<Item = Word> + '_ {
        self.words().filter_map(|(w, m)| m.then_some(w))
    }

    /// One line per word: `<0|1>\t<word>`, shortlex order.
    pub fn write_lines<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (w, m) in self.words() {
            writeln!(out, "{}\t{}", u8::from(m), w.display(&self.alphabet))?;
        }
        Ok(())
    }
}

fn window_size(k: usize, max_len: usize, cap: u64) -> Result<u64, LangError> {
    match count_up_to(k, max_len) {
        Some(total) if total <= cap => Ok(total),
        _ => Err(LangError::CapExceeded { max_len, cap }),
    }
}

fn decode(k: usize, index: u64) -> Word {
    // find the length block holding `index`
    let mut len = 0;
    let mut offset = 0u64;
    loop {
        let block = crate::words::count_of_length(k, len).expect("index within window");
        if index < offset + block {
            let mut buf = Vec::with_capacity(len);
            nth_word(k, len, index - offset, &mut buf);
            return Word(buf);
        }
        offset += block;
        len += 1;
    }
}

/// Exact membership under `engine` for every word up to `max_len`.
pub fn enumerate(
    m: &Machine,
    engine: Engine,
    max_len: usize,
    cap: u64,
) -> Result<LanguageSample, LangError> {
    let k = m.alphabet().len();
    let total = window_size(k, max_len, cap)?;
    let membership = (0..total)
        .into_par_iter()
        .map(|i| accepts(m, engine, &decode(k, i)))
        .collect::<Result<Vec<bool>, _>>()?;
    Ok(LanguageSample {
        alphabet: m.alphabet().clone(),
        max_len,
        membership,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// First word in shortlex order on which the two disagree.
    Counterexample(Word),
}

impl Equivalence {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            Equivalence::Equal => "Equal".to_string(),
            Equivalence::Counterexample(w) => {
                let text = w.display(alphabet).to_string();
                if text.is_empty() {
                    "Counterexample ε".to_string()
                } else {
                    format!("Counterexample {text}")
                }
            }
        }
    }
}

/// Compares two (machine, engine) pairs on every word up to length `n`.
pub fn equivalent_up_to(
    m1: &Machine,
    e1: Engine,
    m2: &Machine,
    e2: Engine,
    n: usize,
    cap: u64,
) -> Result<Equivalence, LangError> {
    if m1.alphabet() != m2.alphabet() {
        return Err(LangError::AlphabetMismatch);
    }
    let k = m1.alphabet().len();
    let total = window_size(k, n, cap)?;
    let first = (0..total)
        .into_par_iter()
        .map(|i| {
            let w = decode(k, i);
            Ok((accepts(m1, e1, &w)? != accepts(m2, e2, &w)?).then_some(i))
        })
        .collect::<Result<Vec<Option<u64>>, EngineError>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(match first {
        None => Equivalence::Equal,
        Some(i) => Equivalence::Counterexample(decode(k, i)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Automaton;
    use families::lab;

    #[test]
    fn lab_owj_is_balanced_words() {
        let m = Machine::Dfa(lab());
        let s = enumerate(&m, Engine::Owj, 6, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(s.membership.len(), 127);
        for (w, member) in s.words() {
            let p = w.parikh(&s.alphabet);
            assert_eq!(member, p.count(0) == p.count(1), "{:?}", w);
        }
    }

    #[test]
    fn lab_classical_is_ab_star() {
        let m = Machine::Dfa(lab());
        let s = enumerate(&m, Engine::Classical, 4, DEFAULT_ENUMERATION_CAP).unwrap();
        let acc: Vec<String> = s
            .accepted()
            .map(|w| w.display(&s.alphabet).to_string())
            .collect();
        assert_eq!(acc, vec!["", "ab", "abab"]);
    }

    #[test]
    fn max_len_zero() {
        let m = Machine::Dfa(lab());
        let s = enumerate(&m, Engine::Owj, 0, 10).unwrap();
        assert_eq!(s.membership, vec![true]);
        assert_eq!(s.contains(&[]), Some(true));
        assert_eq!(s.contains(&[0]), None);
    }

    #[test]
    fn cap_exceeded() {
        let m = Machine::Dfa(lab());
        assert_eq!(
            enumerate(&m, Engine::Owj, 10, 100),
            Err(LangError::CapExceeded {
                max_len: 10,
                cap: 100
            })
        );
    }

    #[test]
    fn lab_owj_vs_classical_counterexample() {
        let m = Machine::Dfa(lab());
        let r = equivalent_up_to(&m, Engine::Owj, &m, Engine::Classical, 4, 1000).unwrap();
        assert_eq!(r, Equivalence::Counterexample(Word(vec![1, 0])));
        assert_eq!(r.render(m.alphabet()), "Counterexample ba");
        assert_eq!(
            equivalent_up_to(&m, Engine::Owj, &m, Engine::Owj, 8, 1000).unwrap(),
            Equivalence::Equal
        );
    }

    #[test]
    fn complete_dfa_engines_agree() {
        let a = Automaton::from_table(
            Alphabet::binary(),
            3,
            vec![Some(1), Some(0), Some(2), Some(0), Some(2), Some(1)],
            0,
            &[2],
        )
        .unwrap();
        let m = Machine::Dfa(a);
        assert_eq!(
            equivalent_up_to(&m, Engine::Classical, &m, Engine::Owj, 8, 1000).unwrap(),
            Equivalence::Equal
        );
    }

    #[test]
    fn alphabet_mismatch() {
        let m = Machine::Dfa(lab());
        let other = Machine::Dfa(
            Automaton::from_table(Alphabet::new(["x"]).unwrap(), 1, vec![None], 0, &[0]).unwrap(),
        );
        assert_eq!(
            equivalent_up_to(&m, Engine::Owj, &other, Engine::Owj, 2, 100),
            Err(LangError::AlphabetMismatch)
        );
    }

    #[test]
    fn sample_export() {
        let m = Machine::Dfa(lab());
        let s = enumerate(&m, Engine::Owj, 2, 100).unwrap();
        let mut buf = Vec::new();
        s.write_lines(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "1\t\n0\ta\n0\tb\n0\taa\n1\tab\n1\tba\n0\tbb\n"
        );
    }
}
