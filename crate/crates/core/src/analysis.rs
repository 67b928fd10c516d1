//! Empirical sweep and jump complexity.
//!
//! For each length `n` the profiler runs the one-way jumping engine on every
//! word of length `n` when `k^n` fits the budget, and on a seeded uniform
//! sample otherwise. Worst cases are taken over all inputs, accepted or not.
//! Ties for the witness go to the lexicographically least word.
//!
//! [`classify_growth`] is a heuristic read of a profile. It suggests a growth
//! class; it does not prove one.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::automaton::{Alphabet, Automaton, Machine, Word};
use crate::engines::{run_owj, RunOutcome};
use crate::format::serialize;
use crate::words::{count_of_length, nth_word};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5EED_0F0A;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("growth classification needs at least {need} measured lengths, got {have}")]
    InsufficientData { have: usize, need: usize },
    #[error("step bound violated on `{word}`: {steps} steps for length {n}")]
    BoundViolation {
        word: String,
        n: usize,
        steps: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileConfig {
    /// Largest `k^n` enumerated exhaustively.
    pub budget: u64,
    /// Words drawn per length when sampling.
    pub samples: u64,
    pub seed: u64,
}

impl Default for ProfileConfig {
    fn default() -> Self {
        ProfileConfig {
            budget: 1 << 20,
            samples: 10_000,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LengthRecord {
    pub n: usize,
    pub max_sweeps: usize,
    /// Least word attaining `max_sweeps`; `None` only when no word of this
    /// length exists (empty alphabet, `n > 0`).
    pub witness: Option<Word>,
    pub max_jumps: usize,
    pub mean_jumps: f64,
    pub words_examined: u64,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepProfile {
    /// FNV-1a hash of the canonical text form.
    pub automaton_id: String,
    pub alphabet: Alphabet,
    pub seed: u64,
    pub records: Vec<LengthRecord>,
}

/// FNV-1a over the canonical serialization, as 16 hex digits.
pub fn automaton_id(a: &Automaton) -> String {
    let text = serialize(&Machine::Dfa(a.clone()));
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

fn length_seed(seed: u64, n: usize) -> u64 {
    seed ^ (n as u64)
        .wrapping_add(1)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs `fold` over the words of length `n` chosen by `cfg` and merges the
/// partial results. Returns the merged value, the mode and the word count.
fn fold_length<T, I, F, M>(
    k: usize,
    n: usize,
    cfg: &ProfileConfig,
    identity: I,
    fold: F,
    merge: M,
) -> (T, Mode, u64)
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, Word) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    match count_of_length(k, n) {
        Some(total) if total <= cfg.budget => {
            let acc = (0..total)
                .into_par_iter()
                .fold(&identity, |acc, i| {
                    let mut buf = Vec::with_capacity(n);
                    nth_word(k, n, i, &mut buf);
                    fold(acc, Word(buf))
                })
                .reduce(&identity, &merge);
            (acc, Mode::Exhaustive, total)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(length_seed(cfg.seed, n));
            let sample: Vec<Word> = (0..cfg.samples)
                .map(|_| Word((0..n).map(|_| rng.gen_range(0..k)).collect()))
                .collect();
            let acc = sample
                .into_par_iter()
                .fold(&identity, &fold)
                .reduce(&identity, &merge);
            (acc, Mode::Sampled, cfg.samples)
        }
    }
}

#[derive(Debug, Clone, Default)]
struct Worst {
    sweeps: usize,
    witness: Option<Word>,
    max_jumps: usize,
    sum_jumps: u64,
}

impl Worst {
    fn add(mut self, w: Word, out: &RunOutcome) -> Self {
        self.max_jumps = self.max_jumps.max(out.jumps);
        self.sum_jumps += out.jumps as u64;
        let better = match &self.witness {
            None => true,
            Some(cur) => out.sweeps > self.sweeps || (out.sweeps == self.sweeps && w < *cur),
        };
        if better {
            self.sweeps = out.sweeps;
            self.witness = Some(w);
        }
        self
    }

    fn merge(self, other: Self) -> Self {
        let (hi, lo) = match (&self.witness, &other.witness) {
            (None, _) => (other, self),
            (_, None) => (self, other),
            (Some(a), Some(b)) => {
                if self.sweeps > other.sweeps || (self.sweeps == other.sweeps && a <= b) {
                    (self, other)
                } else {
                    (other, self)
                }
            }
        };
        Worst {
            sweeps: hi.sweeps,
            witness: hi.witness,
            max_jumps: hi.max_jumps.max(lo.max_jumps),
            sum_jumps: hi.sum_jumps + lo.sum_jumps,
        }
    }
}

/// Worst-case sweep count for every length `0..=n_max`, with jump
/// statistics gathered from the same runs.
pub fn sweep_complexity(a: &Automaton, n_max: usize, cfg: &ProfileConfig) -> SweepProfile {
    let k = a.alphabet().len();
    let records = (0..=n_max)
        .map(|n| {
            let (worst, mode, examined) = fold_length(
                k,
                n,
                cfg,
                Worst::default,
                |acc, w| {
                    let (out, _) = run_owj(a, &w, false).expect("word drawn from the alphabet");
                    acc.add(w, &out)
                },
                Worst::merge,
            );
            LengthRecord {
                n,
                max_sweeps: worst.sweeps,
                witness: worst.witness,
                max_jumps: worst.max_jumps,
                mean_jumps: if examined == 0 {
                    0.0
                } else {
                    worst.sum_jumps as f64 / examined as f64
                },
                words_examined: examined,
                mode,
            }
        })
        .collect();
    SweepProfile {
        automaton_id: automaton_id(a),
        alphabet: a.alphabet().clone(),
        seed: cfg.seed,
        records,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpStats {
    pub n: usize,
    pub max_jumps: usize,
    pub mean_jumps: f64,
}

/// Per-length maximum and mean number of skipped letters.
pub fn jump_statistics(a: &Automaton, n_max: usize, cfg: &ProfileConfig) -> Vec<JumpStats> {
    sweep_complexity(a, n_max, cfg)
        .records
        .iter()
        .map(|r| JumpStats {
            n: r.n,
            max_jumps: r.max_jumps,
            mean_jumps: r.mean_jumps,
        })
        .collect()
}

/// CSV column order.
pub const PROFILE_CSV_HEADER: [&str; 8] = [
    "n",
    "max_sweeps",
    "witness",
    "max_jumps",
    "mean_jumps",
    "words_examined",
    "mode",
    "seed",
];

impl SweepProfile {
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(PROFILE_CSV_HEADER)?;
        for r in &self.records {
            w.write_record([
                r.n.to_string(),
                r.max_sweeps.to_string(),
                self.witness_text(r),
                r.max_jumps.to_string(),
                format!("{:.6}", r.mean_jumps),
                r.words_examined.to_string(),
                r.mode.name().to_string(),
                self.seed.to_string(),
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

    fn witness_text(&self, r: &LengthRecord) -> String {
        r.witness
            .as_ref()
            .map(|w| w.display(&self.alphabet).to_string())
            .unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "automaton_id": self.automaton_id,
            "seed": self.seed,
            "records": self.records.iter().map(|r| json!({
                "n": r.n,
                "max_sweeps": r.max_sweeps,
                "witness": self.witness_text(r),
                "max_jumps": r.max_jumps,
                "mean_jumps": format!("{:.6}", r.mean_jumps),
                "words_examined": r.words_examined,
                "mode": r.mode.name(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn max_sweeps(&self, n: usize) -> Option<usize> {
        self.records.iter().find(|r| r.n == n).map(|r| r.max_sweeps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthClass {
    Constant,
    Sublinear,
    Linear,
    Unclassified,
}

impl GrowthClass {
    pub fn name(self) -> &'static str {
        match self {
            GrowthClass::Constant => "constant",
            GrowthClass::Sublinear => "sublinear",
            GrowthClass::Linear => "linear",
            GrowthClass::Unclassified => "unclassified",
        }
    }
}

/// Heuristic thresholds for [`classify_growth`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthConfig {
    pub min_lengths: usize,
    pub linear_min_slope: f64,
    pub linear_max_slope: f64,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig {
            min_lengths: 6,
            linear_min_slope: 0.05,
            linear_max_slope: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub class: GrowthClass,
    /// Least-squares slope of max_sweeps against n over the top half.
    pub slope: f64,
    pub plateau: bool,
    pub non_decreasing: bool,
    /// Lengths that make up the top half.
    pub window: Vec<usize>,
}

/// Suggests a growth class from the top half of the measured lengths:
/// constant on a plateau, linear when non-decreasing with slope inside
/// `[linear_min_slope, linear_max_slope]`, sublinear when non-decreasing with
/// a smaller slope.
pub fn classify_growth(
    p: &SweepProfile,
    cfg: &GrowthConfig,
) -> Result<GrowthReport, AnalysisError> {
    let have = p.records.len();
    if have < cfg.min_lengths {
        return Err(AnalysisError::InsufficientData {
            have,
            need: cfg.min_lengths,
        });
    }
    let mut recs: Vec<&LengthRecord> = p.records.iter().collect();
    recs.sort_by_key(|r| r.n);
    let top = &recs[have / 2..];
    let xs: Vec<f64> = top.iter().map(|r| r.n as f64).collect();
    let ys: Vec<f64> = top.iter().map(|r| r.max_sweeps as f64).collect();
    let plateau = top.windows(2).all(|w| w[0].max_sweeps == w[1].max_sweeps);
    let non_decreasing = top.windows(2).all(|w| w[0].max_sweeps <= w[1].max_sweeps);
    let slope = least_squares_slope(&xs, &ys);
    let class = if plateau {
        GrowthClass::Constant
    } else if non_decreasing && (cfg.linear_min_slope..=cfg.linear_max_slope).contains(&slope) {
        GrowthClass::Linear
    } else if non_decreasing && slope > 0.0 && slope < cfg.linear_min_slope {
        GrowthClass::Sublinear
    } else {
        GrowthClass::Unclassified
    };
    Ok(GrowthReport {
        class,
        slope,
        plateau,
        non_decreasing,
        window: top.iter().map(|r| r.n).collect(),
    })
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepBoundReport {
    /// Largest observed `steps / n^2`.
    pub max_ratio: f64,
    pub worst_word: Option<Word>,
    /// `(n, max steps, max steps / n^2)` per length `1..=n_max`.
    pub per_length: Vec<(usize, usize, f64)>,
    pub runs: u64,
}

/// Checks `steps <= n^2` (and the finer `steps <= sweeps * n`,
/// `sweeps <= n`) on every examined run.
pub fn verify_step_bound(
    a: &Automaton,
    n_max: usize,
    cfg: &ProfileConfig,
) -> Result<StepBoundReport, AnalysisError> {
    type Acc = Result<Option<(usize, Word)>, (Word, usize)>;
    let k = a.alphabet().len();
    let mut report = StepBoundReport {
        max_ratio: 0.0,
        worst_word: None,
        per_length: Vec::new(),
        runs: 0,
    };
    for n in 1..=n_max {
        let (acc, _, examined): (Acc, _, _) = fold_length(
            k,
            n,
            cfg,
            || Ok(None),
            |acc, w| {
                let best = acc?;
                let (out, _) = run_owj(a, &w, false).expect("word drawn from the alphabet");
                if out.steps > n * n || out.steps > out.sweeps * n || out.sweeps > n {
                    return Err((w, out.steps));
                }
                Ok(match best {
                    Some((s, b)) if s > out.steps || (s == out.steps && b <= w) => Some((s, b)),
                    _ => Some((out.steps, w)),
                })
            },
            |x, y| match (x, y) {
                (Err(e), _) | (_, Err(e)) => Err(e),
                (Ok(None), o) | (o, Ok(None)) => o,
                (Ok(Some((s1, w1))), Ok(Some((s2, w2)))) => {
                    if s1 > s2 || (s1 == s2 && w1 <= w2) {
                        Ok(Some((s1, w1)))
                    } else {
                        Ok(Some((s2, w2)))
                    }
                }
            },
        );
        report.runs += examined;
        match acc {
            Err((w, steps)) => {
                return Err(AnalysisError::BoundViolation {
                    word: w.display(a.alphabet()).to_string(),
                    n,
                    steps,
                })
            }
            Ok(None) => {}
            Ok(Some((steps, w))) => {
                let ratio = steps as f64 / (n * n) as f64;
                report.per_length.push((n, steps, ratio));
                if ratio > report.max_ratio || report.worst_word.is_none() {
                    report.max_ratio = ratio;
                    report.worst_word = Some(w);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langtools::families::lab;

    fn exhaustive() -> ProfileConfig {
        ProfileConfig {
            budget: 1 << 20,
            ..ProfileConfig::default()
        }
    }

    fn complete_two_state() -> Automaton {
        // parity of a's
        Automaton::from_table(
            Alphabet::binary(),
            2,
            vec![Some(1), Some(0), Some(0), Some(1)],
            0,
            &[0],
        )
        .unwrap()
    }

    #[test]
    fn lab_profile_at_ten() {
        let p = sweep_complexity(&lab(), 10, &exhaustive());
        let r = &p.records[10];
        assert!(r.max_sweeps >= 4);
        assert_eq!(r.words_examined, 1024);
        assert_eq!(r.mode, Mode::Exhaustive);
        assert_eq!(p.records[0].max_sweeps, 0);
        for r in &p.records {
            assert!(r.max_sweeps <= r.n);
            let w = r.witness.as_ref().unwrap();
            assert_eq!(w.len(), r.n);
            assert_eq!(run_owj(&lab(), w, false).unwrap().0.sweeps, r.max_sweeps);
        }
    }

    #[test]
    fn complete_machine_is_constant() {
        let a = complete_two_state();
        let p = sweep_complexity(&a, 8, &exhaustive());
        assert!(p
            .records
            .iter()
            .all(|r| r.max_sweeps <= 1 && r.max_jumps == 0));
        let g = classify_growth(&p, &GrowthConfig::default()).unwrap();
        assert_eq!(g.class, GrowthClass::Constant);
        let stats = jump_statistics(&a, 5, &exhaustive());
        assert!(stats
            .iter()
            .all(|s| s.max_jumps == 0 && s.mean_jumps == 0.0));
    }

    #[test]
    fn insufficient_data() {
        let p = sweep_complexity(&lab(), 2, &exhaustive());
        assert_eq!(
            classify_growth(&p, &GrowthConfig::default()),
            Err(AnalysisError::InsufficientData { have: 3, need: 6 })
        );
    }

    #[test]
    fn sampling_kicks_in_past_budget() {
        let cfg = ProfileConfig {
            budget: 16,
            samples: 50,
            seed: 7,
        };
        let p = sweep_complexity(&lab(), 6, &cfg);
        assert_eq!(p.records[4].mode, Mode::Exhaustive);
        assert_eq!(p.records[5].mode, Mode::Sampled);
        assert_eq!(p.records[5].words_examined, 50);
        assert_eq!(p, sweep_complexity(&lab(), 6, &cfg));
        let full = sweep_complexity(&lab(), 6, &exhaustive());
        for (s, e) in p.records.iter().zip(&full.records) {
            assert!(s.max_sweeps <= e.max_sweeps);
        }
    }

    #[test]
    fn step_bound_on_complete_machine() {
        let rep = verify_step_bound(&complete_two_state(), 8, &exhaustive()).unwrap();
        for &(n, steps, ratio) in &rep.per_length {
            assert_eq!(steps, n);
            assert!(ratio <= 1.0 / n as f64 + 1e-12);
        }
    }

    #[test]
    fn csv_layout() {
        let p = sweep_complexity(&lab(), 2, &exhaustive());
        let csv = p.to_csv_string();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("n,max_sweeps,witness,max_jumps,mean_jumps,words_examined,mode,seed")
        );
        assert_eq!(
            lines.next(),
            Some(format!("0,0,,0,0.000000,1,exhaustive,{DEFAULT_SEED}").as_str())
        );
    }
}
