//! Fixture families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::automaton::{Alphabet, Automaton, Machine, Nfa};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}` (expected lab, kth_last, complete_random or partial_random)")]
    UnknownFamily(String),
    #[error("bad parameter for {family}: {message}")]
    BadParameter {
        family: &'static str,
        message: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// Two-state machine accepting words with as many a's as b's under
    /// one-way jumping (and `(ab)*` classically).
    Lab,
    /// `(k+1)`-state NFA for "the k-th letter from the end is a".
    KthLast(usize),
    CompleteRandom {
        n_states: usize,
        seed: u64,
    },
    PartialRandom {
        n_states: usize,
        density: f64,
        seed: u64,
    },
}

fn bad(family: &'static str, message: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family,
        message: message.into(),
    }
}

impl Family {
    /// Builds a family selector from a name and positional parameters.
    /// Random families take their seed separately.
    pub fn parse(name: &str, params: &[String], seed: u64) -> Result<Family, FamilyError> {
        fn arg<T: std::str::FromStr>(
            family: &'static str,
            params: &[String],
            i: usize,
            what: &str,
        ) -> Result<T, FamilyError> {
            let raw = params
                .get(i)
                .ok_or_else(|| bad(family, format!("missing {what}")))?;
            raw.parse()
                .map_err(|_| bad(family, format!("cannot parse {what} `{raw}`")))
        }
        let want = |family: &'static str, n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(bad(
                    family,
                    format!("expected {n} parameter(s), got {}", params.len()),
                ))
            }
        };
        match name {
            "lab" => {
                want("lab", 0)?;
                Ok(Family::Lab)
            }
            "kth_last" => {
                want("kth_last", 1)?;
                Ok(Family::KthLast(arg("kth_last", params, 0, "k")?))
            }
            "complete_random" => {
                want("complete_random", 1)?;
                Ok(Family::CompleteRandom {
                    n_states: arg("complete_random", params, 0, "n_states")?,
                    seed,
                })
            }
            "partial_random" => {
                want("partial_random", 2)?;
                Ok(Family::PartialRandom {
                    n_states: arg("partial_random", params, 0, "n_states")?,
                    density: arg("partial_random", params, 1, "density")?,
                    seed,
                })
            }
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

pub fn gen_family(family: &Family) -> Result<Machine, FamilyError> {
    match *family {
        Family::Lab => Ok(Machine::Dfa(lab())),
        Family::KthLast(k) => kth_last(k).map(Machine::Nfa),
        Family::CompleteRandom { n_states, seed } => {
            complete_random(n_states, seed).map(Machine::Dfa)
        }
        Family::PartialRandom {
            n_states,
            density,
            seed,
        } => partial_random(n_states, density, seed).map(Machine::Dfa),
    }
}

/// `q0 -a-> q1`, `q1 -b-> q0`, accepting `q0`.
pub fn lab() -> Automaton {
    Automaton::from_table(
        Alphabet::binary(),
        2,
        vec![Some(1), None, None, Some(0)],
        0,
        &[0],
    )
    .expect("static fixture")
}

/// State 0 loops on both letters and guesses an `a`; states `1..=k` count
/// the letters after it; state `k` accepts.
pub fn kth_last(k: usize) -> Result<Nfa, FamilyError> {
    if k == 0 {
        return Err(bad("kth_last", "k must be at least 1"));
    }
    let n = k + 1;
    let mut delta = vec![Vec::new(); n * 2];
    delta[0] = vec![0, 1];
    delta[1] = vec![0];
    for q in 1..k {
        delta[q * 2] = vec![q + 1];
        delta[q * 2 + 1] = vec![q + 1];
    }
    let names = (0..n).map(|i| format!("q{i}")).collect();
    Ok(Nfa::from_parts(Alphabet::binary(), names, delta, 0, &[k]).expect("well-formed family"))
}

/// Random complete DFA over `{a, b}`: uniform targets, each state accepting
/// with probability 1/2, start state `q0`.
pub fn complete_random(n_states: usize, seed: u64) -> Result<Automaton, FamilyError> {
    random_dfa("complete_random", n_states, 1.0, seed)
}

/// Like [`complete_random`] but each transition exists with probability
/// `density`.
pub fn partial_random(n_states: usize, density: f64, seed: u64) -> Result<Automaton, FamilyError> {
    if !(0.0..=1.0).contains(&density) {
        return Err(bad(
            "partial_random",
            format!("density {density} outside [0, 1]"),
        ));
    }
    random_dfa("partial_random", n_states, density, seed)
}

fn random_dfa(
    family: &'static str,
    n_states: usize,
    density: f64,
    seed: u64,
) -> Result<Automaton, FamilyError> {
    if n_states == 0 {
        return Err(bad(family, "n_states must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = (0..n_states * 2)
        .map(|_| {
            let target = rng.gen_range(0..n_states);
            rng.gen_bool(density).then_some(target)
        })
        .collect();
    let accepting: Vec<usize> = (0..n_states).filter(|_| rng.gen_bool(0.5)).collect();
    Ok(
        Automaton::from_table(Alphabet::binary(), n_states, delta, 0, &accepting)
            .expect("generated ids are in range"),
    )
}
