//! Workbench for deterministic finite automata run in one-way jumping mode.
//!
//! An [`Automaton`] is an ordinary DFA description whose transition function
//! may be partial. Run under [`engines::run_classical`] it is a plain DFA; run
//! under [`engines::run_owj`] the head treats the input as a circular tape and
//! skips every letter the current state cannot read, coming back for it on a
//! later sweep. [`engines::run_jumping`] gives the unrestricted jumping
//! semantics for comparison.
//!
//! [`analysis`] measures sweep and jump counts over all words of a length,
//! and [`langtools`] covers bounded language enumeration, residual tables,
//! determinization, minimization and fixture families.

pub mod analysis;
pub mod automaton;
pub mod engines;
pub mod format;
pub mod langtools;

mod words;

pub use automaton::{
    Alphabet, Automaton, Machine, Nfa, ParikhVector, RawDescription, StateId, Symbol, Transitions,
    ValidationError, Word,
};
pub use engines::{Engine, EngineError, RunEvent, RunOutcome, Trace};
pub use format::{parse_automaton, serialize, FormatError};
