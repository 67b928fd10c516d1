//! Domain types: alphabets, words, Parikh vectors and the two machine kinds.
//!
//! Machines are built from a [`RawDescription`] (names only) and validated
//! into dense-id form. State and symbol ids follow declaration order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Add;

use serde::Serialize;
use thiserror::Error;

pub type StateId = usize;
pub type Symbol = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("invalid name `{0}`")]
    InvalidName(String),
    #[error("reference to undeclared {kind} `{name}`")]
    OutOfRangeReference { kind: &'static str, name: String },
    #[error("duplicate transition for ({state}, {symbol})")]
    DuplicateTransition { state: String, symbol: String },
    #[error("no start state")]
    MissingStart,
    #[error("automaton has no states")]
    NoStates,
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),
}

/// Ordered set of symbol names with dense ids `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Symbol>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "->"
        && !name
            .chars()
            .any(|c| c.is_whitespace() || c == '#' || c == ':' || c.is_control())
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, ValidationError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for s in symbols {
            let s: String = s.into();
            if !valid_name(&s) || s == "," {
                return Err(ValidationError::InvalidName(s));
            }
            if index.insert(s.clone(), names.len()).is_some() {
                return Err(ValidationError::DuplicateSymbol(s));
            }
            names.push(s);
        }
        Ok(Alphabet {
            symbols: names,
            index,
        })
    }

    /// The alphabet `{a, b}`.
    pub fn binary() -> Self {
        Alphabet::new(["a", "b"]).expect("static alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.symbols[s]
    }

    pub fn id(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).copied()
    }

    /// True when every symbol is a single character, so words can be
    /// written as bare strings.
    pub fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }
}

/// A word as a sequence of symbol ids.
///
/// The alphabet is not stored; engines check ids against the machine's own
/// alphabet and reject mismatches.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ids(alphabet: &Alphabet, ids: Vec<Symbol>) -> Result<Self, ValidationError> {
        if let Some(bad) = ids.iter().find(|&&s| s >= alphabet.len()) {
            return Err(ValidationError::UnknownSymbol(format!("#{bad}")));
        }
        Ok(Word(ids))
    }

    /// Parses a bare string (single-character alphabets) or a comma-separated
    /// list of symbol names.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, ValidationError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let lookup = |name: &str| {
            alphabet
                .id(name)
                .ok_or_else(|| ValidationError::UnknownSymbol(name.to_string()))
        };
        let ids = if alphabet.single_char() && !text.contains(',') {
            text.chars()
                .map(|c| lookup(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.split(',')
                .map(|t| lookup(t.trim()))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(Word(ids))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn parikh(&self, alphabet: &Alphabet) -> ParikhVector {
        parikh(alphabet.len(), self.letters())
    }

    /// Renders the word in the same convention [`Word::parse`] reads.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet.single_char() { "" } else { "," };
        for (i, &s) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            f.write_str(self.alphabet.name(s))?;
        }
        Ok(())
    }
}

/// Per-symbol occurrence counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParikhVector(pub Vec<usize>);

impl ParikhVector {
    pub fn count(&self, s: Symbol) -> usize {
        self.0[s]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl Add for &ParikhVector {
    type Output = ParikhVector;

    fn add(self, rhs: &ParikhVector) -> ParikhVector {
        assert_eq!(
            self.0.len(),
            rhs.0.len(),
            "Parikh vectors over different alphabets"
        );
        ParikhVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

pub fn parikh(alphabet_len: usize, letters: &[Symbol]) -> ParikhVector {
    let mut counts = vec![0; alphabet_len];
    for &s in letters {
        counts[s] += 1;
    }
    ParikhVector(counts)
}

/// Name-level machine description, as read from text or assembled by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RawDescription {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub start: Option<String>,
    pub accept: Vec<String>,
    /// `(from, symbol, to)` in declaration order.
    pub transitions: Vec<(String, String, String)>,
}

/// Access to a machine's transition structure, shared by DFAs and NFAs.
pub trait Transitions {
    fn alphabet(&self) -> &Alphabet;
    fn n_states(&self) -> usize;
    fn start(&self) -> StateId;
    fn is_accepting(&self, q: StateId) -> bool;
    fn successors(&self, q: StateId, s: Symbol) -> &[StateId];
}

/// Deterministic automaton with a possibly partial transition function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Alphabet,
    state_names: Vec<String>,
    // dense table indexed by state * |alphabet| + symbol
    delta: Vec<Option<StateId>>,
    start: StateId,
    accepting: Vec<bool>,
}

impl Automaton {
    /// Builds a machine from dense ids. States are named `q0, q1, ...`.
    pub fn from_table(
        alphabet: Alphabet,
        n_states: usize,
        delta: Vec<Option<StateId>>,
        start: StateId,
        accepting: &[StateId],
    ) -> Result<Self, ValidationError> {
        let names = (0..n_states).map(|i| format!("q{i}")).collect();
        Self::from_parts(alphabet, names, delta, start, accepting)
    }

    pub fn from_parts(
        alphabet: Alphabet,
        state_names: Vec<String>,
        delta: Vec<Option<StateId>>,
        start: StateId,
        accepting: &[StateId],
    ) -> Result<Self, ValidationError> {
        let n = state_names.len();
        if n == 0 {
            return Err(ValidationError::NoStates);
        }
        check_state_names(&state_names)?;
        if start >= n {
            return Err(ValidationError::OutOfRangeReference {
                kind: "state",
                name: format!("#{start}"),
            });
        }
        if delta.len() != n * alphabet.len() {
            return Err(ValidationError::OutOfRangeReference {
                kind: "transition table entry",
                name: format!("len {}", delta.len()),
            });
        }
        if let Some(bad) = delta.iter().flatten().find(|&&t| t >= n) {
            return Err(ValidationError::OutOfRangeReference {
                kind: "state",
                name: format!("#{bad}"),
            });
        }
        let mut acc = vec![false; n];
        for &q in accepting {
            if q >= n {
                return Err(ValidationError::OutOfRangeReference {
                    kind: "state",
                    name: format!("#{q}"),
                });
            }
            acc[q] = true;
        }
        Ok(Automaton {
            alphabet,
            state_names,
            delta,
            start,
            accepting: acc,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n_states(&self) -> usize {
        self.state_names.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.state_names[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    #[inline]
    pub fn delta(&self, q: StateId, s: Symbol) -> Option<StateId> {
        self.delta[q * self.alphabet.len() + s]
    }

    pub fn table(&self) -> &[Option<StateId>] {
        &self.delta
    }

    pub fn accepting(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    /// True iff the transition function is defined on every pair.
    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    /// Adds a non-accepting sink state named `sink` (or `sink'`, ...) that
    /// receives every undefined transition. Complete machines are returned
    /// unchanged.
    pub fn completed(&self) -> Automaton {
        if self.is_complete() {
            return self.clone();
        }
        let n = self.n_states();
        let k = self.alphabet.len();
        let mut name = "sink".to_string();
        while self.state_names.contains(&name) {
            name.push('\'');
        }
        let mut names = self.state_names.clone();
        names.push(name);
        let mut delta: Vec<Option<StateId>> =
            self.delta.iter().map(|t| Some(t.unwrap_or(n))).collect();
        delta.extend(std::iter::repeat_n(Some(n), k));
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        Automaton {
            alphabet: self.alphabet.clone(),
            state_names: names,
            delta,
            start: self.start,
            accepting,
        }
    }

    pub fn to_raw(&self) -> RawDescription {
        let k = self.alphabet.len();
        let mut transitions = Vec::new();
        for q in 0..self.n_states() {
            for s in 0..k {
                if let Some(t) = self.delta(q, s) {
                    transitions.push((
                        self.state_names[q].clone(),
                        self.alphabet.name(s).to_string(),
                        self.state_names[t].clone(),
                    ));
                }
            }
        }
        RawDescription {
            alphabet: self.alphabet.symbols().to_vec(),
            states: self.state_names.clone(),
            start: Some(self.state_names[self.start].clone()),
            accept: self
                .accepting()
                .map(|q| self.state_names[q].clone())
                .collect(),
            transitions,
        }
    }

    /// Views this DFA as an NFA with singleton or empty successor sets.
    pub fn to_nfa(&self) -> Nfa {
        let delta = self
            .delta
            .iter()
            .map(|t| t.map(|q| vec![q]).unwrap_or_default())
            .collect();
        Nfa {
            alphabet: self.alphabet.clone(),
            state_names: self.state_names.clone(),
            delta,
            start: self.start,
            accepting: self.accepting.clone(),
        }
    }
}

impl Transitions for Automaton {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn n_states(&self) -> usize {
        self.state_names.len()
    }

    fn start(&self) -> StateId {
        self.start
    }

    fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    fn successors(&self, q: StateId, s: Symbol) -> &[StateId] {
        match &self.delta[q * self.alphabet.len() + s] {
            Some(t) => std::slice::from_ref(t),
            None => &[],
        }
    }
}

/// Nondeterministic automaton without epsilon moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_names: Vec<String>,
    // sorted, deduplicated target sets; same indexing as Automaton::delta
    delta: Vec<Vec<StateId>>,
    start: StateId,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn from_parts(
        alphabet: Alphabet,
        state_names: Vec<String>,
        delta: Vec<Vec<StateId>>,
        start: StateId,
        accepting: &[StateId],
    ) -> Result<Self, ValidationError> {
        let n = state_names.len();
        if n == 0 {
            return Err(ValidationError::NoStates);
        }
        check_state_names(&state_names)?;
        let oor = |q: usize| ValidationError::OutOfRangeReference {
            kind: "state",
            name: format!("#{q}"),
        };
        if start >= n {
            return Err(oor(start));
        }
        if delta.len() != n * alphabet.len() {
            return Err(ValidationError::OutOfRangeReference {
                kind: "transition table entry",
                name: format!("len {}", delta.len()),
            });
        }
        let mut sets = Vec::with_capacity(delta.len());
        for targets in delta {
            let set: BTreeSet<StateId> = targets.into_iter().collect();
            if let Some(&bad) = set.iter().find(|&&t| t >= n) {
                return Err(oor(bad));
            }
            sets.push(set.into_iter().collect());
        }
        let mut acc = vec![false; n];
        for &q in accepting {
            if q >= n {
                return Err(oor(q));
            }
            acc[q] = true;
        }
        Ok(Nfa {
            alphabet,
            state_names,
            delta: sets,
            start,
            accepting: acc,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n_states(&self) -> usize {
        self.state_names.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.state_names[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn accepting(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    /// True when no `(state, symbol)` pair has more than one target.
    pub fn is_deterministic(&self) -> bool {
        self.delta.iter().all(|t| t.len() <= 1)
    }

    /// Converts to an [`Automaton`] if every pair has at most one target.
    pub fn to_automaton(&self) -> Option<Automaton> {
        if !self.is_deterministic() {
            return None;
        }
        Some(Automaton {
            alphabet: self.alphabet.clone(),
            state_names: self.state_names.clone(),
            delta: self.delta.iter().map(|t| t.first().copied()).collect(),
            start: self.start,
            accepting: self.accepting.clone(),
        })
    }

    pub fn to_raw(&self) -> RawDescription {
        let k = self.alphabet.len();
        let mut transitions = Vec::new();
        for q in 0..self.n_states() {
            for s in 0..k {
                for &t in &self.delta[q * k + s] {
                    transitions.push((
                        self.state_names[q].clone(),
                        self.alphabet.name(s).to_string(),
                        self.state_names[t].clone(),
                    ));
                }
            }
        }
        RawDescription {
            alphabet: self.alphabet.symbols().to_vec(),
            states: self.state_names.clone(),
            start: Some(self.state_names[self.start].clone()),
            accept: self
                .accepting()
                .map(|q| self.state_names[q].clone())
                .collect(),
            transitions,
        }
    }
}

impl Transitions for Nfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn n_states(&self) -> usize {
        self.state_names.len()
    }

    fn start(&self) -> StateId {
        self.start
    }

    fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    fn successors(&self, q: StateId, s: Symbol) -> &[StateId] {
        &self.delta[q * self.alphabet.len() + s]
    }
}

/// Either kind of machine, as produced by the parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Machine {
    Dfa(Automaton),
    Nfa(Nfa),
}

impl Machine {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Machine::Dfa(a) => a.alphabet(),
            Machine::Nfa(n) => n.alphabet(),
        }
    }

    pub fn n_states(&self) -> usize {
        match self {
            Machine::Dfa(a) => a.n_states(),
            Machine::Nfa(n) => n.n_states(),
        }
    }

    pub fn as_dfa(&self) -> Option<&Automaton> {
        match self {
            Machine::Dfa(a) => Some(a),
            Machine::Nfa(_) => None,
        }
    }

    pub fn to_raw(&self) -> RawDescription {
        match self {
            Machine::Dfa(a) => a.to_raw(),
            Machine::Nfa(n) => n.to_raw(),
        }
    }
}

impl From<Automaton> for Machine {
    fn from(a: Automaton) -> Self {
        Machine::Dfa(a)
    }
}

impl From<Nfa> for Machine {
    fn from(n: Nfa) -> Self {
        Machine::Nfa(n)
    }
}

fn check_state_names(names: &[String]) -> Result<(), ValidationError> {
    let mut seen = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if !valid_name(name) {
            return Err(ValidationError::InvalidName(name.clone()));
        }
        if seen.insert(name.as_str(), i).is_some() {
            return Err(ValidationError::DuplicateState(name.clone()));
        }
    }
    Ok(())
}

struct Resolved {
    alphabet: Alphabet,
    states: Vec<String>,
    start: StateId,
    accept: Vec<StateId>,
    delta: Vec<Vec<StateId>>,
}

fn resolve(raw: &RawDescription) -> Result<Resolved, ValidationError> {
    let alphabet = Alphabet::new(raw.alphabet.iter().cloned())?;
    if raw.states.is_empty() {
        return Err(ValidationError::NoStates);
    }
    check_state_names(&raw.states)?;
    let index: HashMap<&str, StateId> = raw
        .states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let state = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| ValidationError::OutOfRangeReference {
                kind: "state",
                name: name.to_string(),
            })
    };
    let start = state(raw.start.as_deref().ok_or(ValidationError::MissingStart)?)?;
    let accept = raw
        .accept
        .iter()
        .map(|s| state(s))
        .collect::<Result<Vec<_>, _>>()?;
    let k = alphabet.len();
    let mut delta = vec![Vec::new(); raw.states.len() * k];
    for (from, sym, to) in &raw.transitions {
        let q = state(from)?;
        let s = alphabet
            .id(sym)
            .ok_or_else(|| ValidationError::OutOfRangeReference {
                kind: "symbol",
                name: sym.clone(),
            })?;
        let t = state(to)?;
        let cell = &mut delta[q * k + s];
        if cell.contains(&t) {
            return Err(ValidationError::DuplicateTransition {
                state: from.clone(),
                symbol: sym.clone(),
            });
        }
        cell.push(t);
    }
    Ok(Resolved {
        alphabet,
        states: raw.states.clone(),
        start,
        accept,
        delta,
    })
}

/// Validates a description as a deterministic (possibly partial) automaton.
///
/// Two different targets for the same `(state, symbol)` pair are a
/// [`ValidationError::DuplicateTransition`]; use [`validate_machine`] to get
/// an [`Nfa`] instead.
pub fn validate(raw: &RawDescription) -> Result<Automaton, ValidationError> {
    let r = resolve(raw)?;
    let k = r.alphabet.len();
    let mut delta = Vec::with_capacity(r.delta.len());
    for (i, targets) in r.delta.iter().enumerate() {
        if targets.len() > 1 {
            return Err(ValidationError::DuplicateTransition {
                state: r.states[i / k].clone(),
                symbol: r.alphabet.name(i % k).to_string(),
            });
        }
        delta.push(targets.first().copied());
    }
    Automaton::from_parts(r.alphabet, r.states, delta, r.start, &r.accept)
}

/// Validates a description, returning a DFA when every pair has at most one
/// target and an NFA otherwise.
pub fn validate_machine(raw: &RawDescription) -> Result<Machine, ValidationError> {
    let r = resolve(raw)?;
    if r.delta.iter().all(|t| t.len() <= 1) {
        let delta = r.delta.iter().map(|t| t.first().copied()).collect();
        Automaton::from_parts(r.alphabet, r.states, delta, r.start, &r.accept).map(Machine::Dfa)
    } else {
        // Nfa keeps target sets sorted by id; declaration order of repeated
        // lines is therefore not preserved beyond that.
        Nfa::from_parts(r.alphabet, r.states, r.delta, r.start, &r.accept).map(Machine::Nfa)
    }
}
