//! Execution semantics.
//!
//! Three ways to run a word:
//!
//! * [`run_classical`]: ordinary DFA run; an undefined transition rejects.
//! * [`run_owj`]: one-way jumping run. The unconsumed letters sit on a
//!   circular tape with a fixed origin. From the current head position the
//!   head moves clockwise, skipping every letter the current state has no
//!   transition for and reading the first one it has. Skipped letters keep
//!   their relative order and are seen again on the next pass.
//! * [`run_jumping`]: general jumping acceptance, where any occurrence of a
//!   readable letter may be consumed next.
//!
//! # Counting conventions
//!
//! A *sweep* is a pass started over a nonempty remaining tape. The first pass
//! is sweep 1 and an empty input has 0 sweeps. In the event log the first
//! sweep is implicit; a [`RunEvent::SweepBoundary`] is emitted each time the
//! head crosses the origin into sweep 2, 3, ...
//!
//! `jumps` counts [`RunEvent::Skip`] events, i.e. letters jumped over, not
//! maximal jump moves. `steps` counts head movements (reads plus skips).
//!
//! A run halts with rejection when the tape is empty in a non-accepting
//! state, or when every remaining letter has been skipped since the last
//! read (the head would cycle forever). The pass in which that happens still
//! counts as a sweep. Positions in events are 1-based indices into the
//! original word.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::automaton::{Automaton, Machine, Nfa, StateId, Symbol, Transitions, Word};

/// Default node cap for [`run_jumping`].
pub const DEFAULT_JUMPING_NODE_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("symbol id {symbol} is outside the automaton's {alphabet_len}-letter alphabet")]
    AlphabetMismatch { symbol: Symbol, alphabet_len: usize },
    #[error("run has already halted")]
    AlreadyHalted,
    #[error("jumping search exceeded {cap} (state, multiset) nodes")]
    SearchBudgetExceeded { cap: usize },
    #[error("the {engine} engine does not support {what}")]
    Unsupported { engine: Engine, what: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Classical,
    Owj,
    Jumping,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Classical => "classical",
            Engine::Owj => "owj",
            Engine::Jumping => "jumping",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" => Ok(Engine::Classical),
            "owj" => Ok(Engine::Owj),
            "jumping" => Ok(Engine::Jumping),
            other => Err(format!(
                "unknown engine `{other}` (expected classical, owj or jumping)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HaltReason {
    /// Tape empty, accepting state.
    Accepted,
    /// Tape empty, non-accepting state.
    Rejected,
    /// Every remaining letter skipped since the last read.
    Stuck,
    /// Classical run met an undefined transition.
    Undefined,
}

impl HaltReason {
    pub fn name(self) -> &'static str {
        match self {
            HaltReason::Accepted => "accepted",
            HaltReason::Rejected => "rejected",
            HaltReason::Stuck => "stuck",
            HaltReason::Undefined => "undefined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunEvent {
    Read {
        position: usize,
        symbol: Symbol,
        from: StateId,
        to: StateId,
    },
    Skip {
        position: usize,
        symbol: Symbol,
        state: StateId,
    },
    SweepBoundary {
        sweep: usize,
    },
    Halt {
        reason: HaltReason,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub accepted: bool,
    pub final_state: StateId,
    pub halt: HaltReason,
    pub sweeps: usize,
    pub jumps: usize,
    pub steps: usize,
    pub consumed: usize,
    /// Unconsumed letters in original relative order.
    pub residue: Vec<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub events: Vec<RunEvent>,
    pub outcome: RunOutcome,
}

/// Counters recomputed from an event log.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counters {
    pub sweeps: usize,
    pub jumps: usize,
    pub steps: usize,
    pub consumed: usize,
}

/// One row of the sweep-by-sweep picture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub sweep: usize,
    /// Positions still on the tape when the sweep started.
    pub tape: Vec<usize>,
    pub reads: Vec<usize>,
    pub skips: Vec<usize>,
}

fn check_word(alphabet_len: usize, w: &Word) -> Result<(), EngineError> {
    match w.letters().iter().find(|&&s| s >= alphabet_len) {
        Some(&symbol) => Err(EngineError::AlphabetMismatch {
            symbol,
            alphabet_len,
        }),
        None => Ok(()),
    }
}

/// Plain DFA run.
///
/// An undefined transition halts with rejection and leaves the unread suffix,
/// offending letter included, as residue.
pub fn run_classical(a: &Automaton, w: &Word) -> Result<RunOutcome, EngineError> {
    check_word(a.alphabet().len(), w)?;
    let letters = w.letters();
    let mut state = a.start();
    for (i, &s) in letters.iter().enumerate() {
        match a.delta(state, s) {
            Some(t) => state = t,
            None => {
                return Ok(RunOutcome {
                    accepted: false,
                    final_state: state,
                    halt: HaltReason::Undefined,
                    sweeps: 1,
                    jumps: 0,
                    steps: i,
                    consumed: i,
                    residue: letters[i..].to_vec(),
                })
            }
        }
    }
    let accepted = a.is_accepting(state);
    Ok(RunOutcome {
        accepted,
        final_state: state,
        halt: if accepted {
            HaltReason::Accepted
        } else {
            HaltReason::Rejected
        },
        sweeps: usize::from(!letters.is_empty()),
        jumps: 0,
        steps: letters.len(),
        consumed: letters.len(),
        residue: Vec::new(),
    })
}

/// Incremental one-way jumping run. Each [`OwjRun::step`] makes one head
/// movement, crosses the origin, or halts.
#[derive(Debug, Clone)]
pub struct OwjRun<'a> {
    automaton: &'a Automaton,
    letters: &'a [Symbol],
    // 0-based positions visited by the current pass, increasing
    pass: Vec<usize>,
    cursor: usize,
    // positions skipped in the current pass, increasing
    deferred: Vec<usize>,
    state: StateId,
    sweeps: usize,
    jumps: usize,
    steps: usize,
    consumed: usize,
    // skips since the last read
    idle: usize,
    halted: Option<HaltReason>,
}

impl<'a> OwjRun<'a> {
    pub fn new(automaton: &'a Automaton, word: &'a Word) -> Result<Self, EngineError> {
        check_word(automaton.alphabet().len(), word)?;
        let letters = word.letters();
        Ok(OwjRun {
            automaton,
            letters,
            pass: (0..letters.len()).collect(),
            cursor: 0,
            deferred: Vec::new(),
            state: automaton.start(),
            sweeps: usize::from(!letters.is_empty()),
            jumps: 0,
            steps: 0,
            consumed: 0,
            idle: 0,
            halted: None,
        })
    }

    pub fn state(&self) -> StateId {
        self.state
    }

    pub fn is_halted(&self) -> bool {
        self.halted.is_some()
    }

    fn remaining(&self) -> usize {
        self.pass.len() - self.cursor + self.deferred.len()
    }

    pub fn step(&mut self) -> Result<RunEvent, EngineError> {
        if self.halted.is_some() {
            return Err(EngineError::AlreadyHalted);
        }
        let remaining = self.remaining();
        if remaining == 0 || self.idle == remaining {
            let reason = if remaining > 0 {
                HaltReason::Stuck
            } else if self.automaton.is_accepting(self.state) {
                HaltReason::Accepted
            } else {
                HaltReason::Rejected
            };
            self.halted = Some(reason);
            return Ok(RunEvent::Halt { reason });
        }
        if self.cursor == self.pass.len() {
            self.pass = std::mem::take(&mut self.deferred);
            self.cursor = 0;
            self.sweeps += 1;
            return Ok(RunEvent::SweepBoundary { sweep: self.sweeps });
        }
        let pos = self.pass[self.cursor];
        self.cursor += 1;
        self.steps += 1;
        let symbol = self.letters[pos];
        match self.automaton.delta(self.state, symbol) {
            Some(to) => {
                let from = self.state;
                self.state = to;
                self.consumed += 1;
                self.idle = 0;
                Ok(RunEvent::Read {
                    position: pos + 1,
                    symbol,
                    from,
                    to,
                })
            }
            None => {
                self.deferred.push(pos);
                self.jumps += 1;
                self.idle += 1;
                Ok(RunEvent::Skip {
                    position: pos + 1,
                    symbol,
                    state: self.state,
                })
            }
        }
    }

    /// Outcome so far; complete once the run has halted.
    pub fn outcome(&self) -> RunOutcome {
        let mut rest: Vec<usize> = self.deferred.clone();
        rest.extend_from_slice(&self.pass[self.cursor..]);
        debug_assert!(rest.windows(2).all(|p| p[0] < p[1]));
        let halt = self.halted.unwrap_or(HaltReason::Rejected);
        RunOutcome {
            accepted: halt == HaltReason::Accepted,
            final_state: self.state,
            halt,
            sweeps: self.sweeps,
            jumps: self.jumps,
            steps: self.steps,
            consumed: self.consumed,
            residue: rest.into_iter().map(|p| self.letters[p]).collect(),
        }
    }
}

/// One-way jumping run, optionally recording the event log.
pub fn run_owj(
    a: &Automaton,
    w: &Word,
    trace: bool,
) -> Result<(RunOutcome, Option<Trace>), EngineError> {
    let mut run = OwjRun::new(a, w)?;
    let mut events = Vec::new();
    loop {
        let ev = run.step()?;
        if trace {
            events.push(ev);
        }
        if let RunEvent::Halt { .. } = ev {
            break;
        }
    }
    let outcome = run.outcome();
    let trace = trace.then(|| Trace {
        events,
        outcome: outcome.clone(),
    });
    Ok((outcome, trace))
}

/// General jumping acceptance: does some order of consuming the letters
/// reach an accepting state with nothing left?
///
/// Acceptance depends only on the Parikh vector of the remaining letters, so
/// the search runs over `(state, remaining counts)` nodes. Fails with
/// [`EngineError::SearchBudgetExceeded`] once more than `node_cap` nodes have
/// been visited.
pub fn run_jumping<T: Transitions>(m: &T, w: &Word, node_cap: usize) -> Result<bool, EngineError> {
    let k = m.alphabet().len();
    check_word(k, w)?;
    let initial = w.parikh(m.alphabet()).0;
    if initial.iter().all(|&c| c == 0) {
        return Ok(m.is_accepting(m.start()));
    }

    // mixed-radix key: counts[s] has radix initial[s] + 1
    let mut strides = vec![0u64; k];
    let mut space: u64 = 1;
    for s in 0..k {
        strides[s] = space;
        space = space
            .checked_mul(initial[s] as u64 + 1)
            .ok_or(EngineError::SearchBudgetExceeded { cap: node_cap })?;
    }
    space
        .checked_mul(m.n_states() as u64)
        .ok_or(EngineError::SearchBudgetExceeded { cap: node_cap })?;
    let key = |q: StateId, counts: &[usize]| {
        q as u64 * space
            + counts
                .iter()
                .zip(&strides)
                .map(|(&c, &st)| c as u64 * st)
                .sum::<u64>()
    };

    let mut visited = HashSet::new();
    let mut stack = vec![(m.start(), initial)];
    visited.insert(key(m.start(), &stack[0].1));
    while let Some((q, counts)) = stack.pop() {
        if counts.iter().all(|&c| c == 0) {
            if m.is_accepting(q) {
                return Ok(true);
            }
            continue;
        }
        for s in 0..k {
            if counts[s] == 0 {
                continue;
            }
            for &t in m.successors(q, s) {
                let mut next = counts.clone();
                next[s] -= 1;
                if visited.insert(key(t, &next)) {
                    if visited.len() > node_cap {
                        return Err(EngineError::SearchBudgetExceeded { cap: node_cap });
                    }
                    stack.push((t, next));
                }
            }
        }
    }
    Ok(false)
}

/// Classical NFA acceptance by on-the-fly subset simulation.
pub fn run_nfa(n: &Nfa, w: &Word) -> Result<bool, EngineError> {
    check_word(n.alphabet().len(), w)?;
    let mut current = vec![false; n.n_states()];
    current[n.start()] = true;
    for &s in w.letters() {
        let mut next = vec![false; n.n_states()];
        for q in (0..n.n_states()).filter(|&q| current[q]) {
            for &t in n.successors(q, s) {
                next[t] = true;
            }
        }
        current = next;
    }
    Ok((0..n.n_states()).any(|q| current[q] && n.is_accepting(q)))
}

/// Membership of `w` under `engine`. NFAs have no one-way jumping semantics
/// here.
pub fn accepts(m: &Machine, engine: Engine, w: &Word) -> Result<bool, EngineError> {
    match (m, engine) {
        (Machine::Dfa(a), Engine::Classical) => Ok(run_classical(a, w)?.accepted),
        (Machine::Dfa(a), Engine::Owj) => Ok(run_owj(a, w, false)?.0.accepted),
        (Machine::Dfa(a), Engine::Jumping) => run_jumping(a, w, DEFAULT_JUMPING_NODE_CAP),
        (Machine::Nfa(n), Engine::Classical) => run_nfa(n, w),
        (Machine::Nfa(_), Engine::Owj) => Err(EngineError::Unsupported {
            engine,
            what: "nondeterministic machines",
        }),
        (Machine::Nfa(n), Engine::Jumping) => run_jumping(n, w, DEFAULT_JUMPING_NODE_CAP),
    }
}

impl Trace {
    /// Recomputes the counters from the event log alone.
    pub fn replay(&self) -> Counters {
        let mut c = Counters::default();
        let mut moved = false;
        for ev in &self.events {
            match ev {
                RunEvent::Read { .. } => {
                    c.consumed += 1;
                    c.steps += 1;
                    moved = true;
                }
                RunEvent::Skip { .. } => {
                    c.jumps += 1;
                    c.steps += 1;
                    moved = true;
                }
                RunEvent::SweepBoundary { .. } => c.sweeps += 1,
                RunEvent::Halt { .. } => {}
            }
        }
        c.sweeps += usize::from(moved);
        c
    }

    /// Splits the log into sweeps, with the tape contents at the start of each.
    pub fn sweep_rows(&self) -> Vec<SweepRow> {
        let total = self.outcome.consumed + self.outcome.residue.len();
        let mut tape: Vec<usize> = (1..=total).collect();
        let mut rows = Vec::new();
        if total == 0 {
            return rows;
        }
        let mut row = SweepRow {
            sweep: 1,
            tape: tape.clone(),
            reads: Vec::new(),
            skips: Vec::new(),
        };
        for ev in &self.events {
            match *ev {
                RunEvent::Read { position, .. } => {
                    row.reads.push(position);
                    tape.retain(|&p| p != position);
                }
                RunEvent::Skip { position, .. } => row.skips.push(position),
                RunEvent::SweepBoundary { sweep } => {
                    let next = SweepRow {
                        sweep,
                        tape: tape.clone(),
                        reads: Vec::new(),
                        skips: Vec::new(),
                    };
                    rows.push(std::mem::replace(&mut row, next));
                }
                RunEvent::Halt { .. } => {}
            }
        }
        rows.push(row);
        rows
    }

    /// JSON form of the event log. Key names:
    ///
    /// * `{"kind": "read", "position", "symbol", "from", "to"}`
    /// * `{"kind": "skip", "position", "symbol", "state"}`
    /// * `{"kind": "sweep_boundary", "sweep"}`
    /// * `{"kind": "halt", "reason"}`
    pub fn events_json(&self, a: &Automaton) -> Value {
        let sym = |s: Symbol| a.alphabet().name(s).to_string();
        let st = |q: StateId| a.state_name(q).to_string();
        Value::Array(
            self.events
                .iter()
                .map(|ev| match *ev {
                    RunEvent::Read {
                        position,
                        symbol,
                        from,
                        to,
                    } => json!({
                        "kind": "read",
                        "position": position,
                        "symbol": sym(symbol),
                        "from": st(from),
                        "to": st(to),
                    }),
                    RunEvent::Skip {
                        position,
                        symbol,
                        state,
                    } => json!({
                        "kind": "skip",
                        "position": position,
                        "symbol": sym(symbol),
                        "state": st(state),
                    }),
                    RunEvent::SweepBoundary { sweep } => {
                        json!({"kind": "sweep_boundary", "sweep": sweep})
                    }
                    RunEvent::Halt { reason } => json!({"kind": "halt", "reason": reason.name()}),
                })
                .collect(),
        )
    }

    /// Line-oriented event log: `read <pos> <sym> <from> <to>`,
    /// `skip <pos> <sym> <state>`, `sweep <n>`, `halt <reason>`.
    pub fn events_text(&self, a: &Automaton) -> String {
        let mut out = String::new();
        for ev in &self.events {
            let line = match *ev {
                RunEvent::Read {
                    position,
                    symbol,
                    from,
                    to,
                } => format!(
                    "read {position} {} {} {}",
                    a.alphabet().name(symbol),
                    a.state_name(from),
                    a.state_name(to)
                ),
                RunEvent::Skip {
                    position,
                    symbol,
                    state,
                } => format!(
                    "skip {position} {} {}",
                    a.alphabet().name(symbol),
                    a.state_name(state)
                ),
                RunEvent::SweepBoundary { sweep } => format!("sweep {sweep}"),
                RunEvent::Halt { reason } => format!("halt {}", reason.name()),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

impl RunOutcome {
    pub fn verdict(&self) -> &'static str {
        if self.accepted {
            "ACCEPT"
        } else {
            "REJECT"
        }
    }

    /// `ACCEPT sweeps=4 jumps=12 steps=22`
    pub fn summary(&self) -> String {
        format!(
            "{} sweeps={} jumps={} steps={}",
            self.verdict(),
            self.sweeps,
            self.jumps,
            self.steps
        )
    }

    pub fn to_json(&self, a: &Automaton) -> Value {
        json!({
            "verdict": self.verdict(),
            "accepted": self.accepted,
            "final_state": a.state_name(self.final_state),
            "halt": self.halt.name(),
            "sweeps": self.sweeps,
            "jumps": self.jumps,
            "steps": self.steps,
            "consumed": self.consumed,
            "residue": Word(self.residue.clone()).display(a.alphabet()).to_string(),
        })
    }
}

/// Renders one line per sweep: letters read in that sweep in brackets,
/// everything else still on the tape plain.
pub fn render_sweeps(a: &Automaton, w: &Word, trace: &Trace) -> String {
    let mut out = String::new();
    for row in trace.sweep_rows() {
        let cells: Vec<String> = row
            .tape
            .iter()
            .map(|&p| {
                let name = a.alphabet().name(w.letters()[p - 1]);
                if row.reads.contains(&p) {
                    format!("[{name}]")
                } else {
                    name.to_string()
                }
            })
            .collect();
        out.push_str(&format!("sweep {}: {}\n", row.sweep, cells.join(" ")));
    }
    out.push_str(&trace.outcome.summary());
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_automaton;

    fn lab() -> Automaton {
        parse_automaton(
            "alphabet: a b\nstates: q0 q1\nstart: q0\naccept: q0\nq0 a -> q1\nq1 b -> q0\n",
        )
        .unwrap()
        .as_dfa()
        .unwrap()
        .clone()
    }

    fn word(s: &str) -> Word {
        Word::parse(&crate::Alphabet::binary(), s).unwrap()
    }

    #[test]
    fn classical_examples() {
        let a = lab();
        assert!(run_classical(&a, &word("ab")).unwrap().accepted);
        let r = run_classical(&a, &word("ba")).unwrap();
        assert!(!r.accepted);
        assert_eq!(r.consumed, 0);
        assert_eq!(r.residue, vec![1, 0]);
        assert_eq!(r.sweeps, 1);
        let e = run_classical(&a, &Word::empty()).unwrap();
        assert!(e.accepted);
        assert_eq!(e.sweeps, 0);
    }

    #[test]
    fn lab_run_aaaabbabbb() {
        let a = lab();
        let (out, trace) = run_owj(&a, &word("aaaabbabbb"), true).unwrap();
        assert!(out.accepted);
        assert_eq!(out.sweeps, 4);
        assert_eq!(out.jumps, 12);
        assert_eq!(out.steps, 22);
        assert_eq!(out.consumed, 10);
        let rows = trace.unwrap().sweep_rows();
        let reads: Vec<Vec<usize>> = rows.iter().map(|r| r.reads.clone()).collect();
        assert_eq!(
            reads,
            vec![vec![1, 5, 7, 8], vec![2, 6], vec![3, 9], vec![4, 10]]
        );
        let skips: Vec<usize> = rows.iter().map(|r| r.skips.len()).collect();
        assert_eq!(skips, vec![6, 4, 2, 0]);
    }

    #[test]
    fn aab_reads_everything_then_rejects() {
        let (out, _) = run_owj(&lab(), &word("aab"), false).unwrap();
        assert!(!out.accepted);
        assert_eq!(out.halt, HaltReason::Rejected);
        assert_eq!(out.final_state, 1);
        assert_eq!(out.consumed, 3);
        assert!(out.residue.is_empty());
        assert_eq!(out.sweeps, 2);
    }

    #[test]
    fn stuck_run_keeps_residue_in_order() {
        // sweep 1 reads the a, sweep 2 reads one b, then q0 faces only b's
        let (out, trace) = run_owj(&lab(), &word("bbba"), true).unwrap();
        assert_eq!(out.halt, HaltReason::Stuck);
        assert_eq!(out.residue, vec![1, 1]);
        assert_eq!(out.consumed + out.residue.len(), 4);
        assert_eq!(out.sweeps, 2);
        let t = trace.unwrap();
        assert_eq!(
            t.events.last(),
            Some(&RunEvent::Halt {
                reason: HaltReason::Stuck
            })
        );
        let rows = t.sweep_rows();
        assert_eq!(rows[1].reads, vec![1]);
        assert_eq!(rows[1].skips, vec![2, 3]);

        // halts inside a pass that reads nothing
        let (out, trace) = run_owj(&lab(), &word("bab"), true).unwrap();
        assert_eq!(out.halt, HaltReason::Stuck);
        assert_eq!(out.sweeps, 2);
        let rows = trace.unwrap().sweep_rows();
        assert!(rows[1].reads.is_empty());
    }

    #[test]
    fn stepper_examples() {
        let a = lab();
        let w = word("aaaabbabbb");
        let mut run = OwjRun::new(&a, &w).unwrap();
        assert_eq!(
            run.step().unwrap(),
            RunEvent::Read {
                position: 1,
                symbol: 0,
                from: 0,
                to: 1
            }
        );
        assert_eq!(
            run.step().unwrap(),
            RunEvent::Skip {
                position: 2,
                symbol: 0,
                state: 1
            }
        );
        while !run.is_halted() {
            run.step().unwrap();
        }
        assert_eq!(run.step(), Err(EngineError::AlreadyHalted));
    }

    #[test]
    fn empty_word() {
        let (out, trace) = run_owj(&lab(), &Word::empty(), true).unwrap();
        assert!(out.accepted);
        assert_eq!(out.sweeps, 0);
        let t = trace.unwrap();
        assert_eq!(
            t.events,
            vec![RunEvent::Halt {
                reason: HaltReason::Accepted
            }]
        );
        assert!(t.sweep_rows().is_empty());
    }

    #[test]
    fn alphabet_mismatch() {
        let w = Word(vec![0, 2]);
        assert!(matches!(
            run_owj(&lab(), &w, false),
            Err(EngineError::AlphabetMismatch { symbol: 2, .. })
        ));
        assert!(run_classical(&lab(), &w).is_err());
        assert!(run_jumping(&lab(), &w, 100).is_err());
    }

    #[test]
    fn jumping_examples() {
        let a = lab();
        assert!(run_jumping(&a, &word("ba"), DEFAULT_JUMPING_NODE_CAP).unwrap());
        assert!(!run_jumping(&a, &word("aab"), DEFAULT_JUMPING_NODE_CAP).unwrap());
        assert!(run_jumping(&a, &Word::empty(), 1).unwrap());
        assert_eq!(
            run_jumping(&a, &word("aaaaabbbbb"), 3),
            Err(EngineError::SearchBudgetExceeded { cap: 3 })
        );
    }

    #[test]
    fn render_aaaabbabbb() {
        let a = lab();
        let w = word("aaaabbabbb");
        let (_, t) = run_owj(&a, &w, true).unwrap();
        let text = render_sweeps(&a, &w, &t.unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "sweep 1: [a] a a a [b] b [a] [b] b b");
        assert_eq!(lines[1], "sweep 2: [a] a a [b] b b");
        assert_eq!(lines[2], "sweep 3: [a] a [b] b");
        assert_eq!(lines[3], "sweep 4: [a] [b]");
        assert_eq!(lines[4], "ACCEPT sweeps=4 jumps=12 steps=22");
    }
}
