//! Oracles that share no code with the engines they check.
#![allow(dead_code)]

use owjfa::Automaton;

/// Result of the rotation-form simulator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveRun {
    pub accepted: bool,
    pub final_state: usize,
    pub sweeps: usize,
    pub skips: usize,
    pub reads: usize,
    /// 1-based positions read in each sweep.
    pub reads_per_sweep: Vec<Vec<usize>>,
    /// Unread letters in original order.
    pub residue: Vec<usize>,
}

/// One-way jumping run written directly from the rewriting form
/// `q x a y => p y x`: `x` is the longest prefix the state cannot read, `a`
/// is read, and `x` moves behind `y`. When no letter is readable the
/// remaining tape is skipped once more and the run rejects.
///
/// Sweeps are recovered from the order of visited positions: every time the
/// visited position drops, the head has crossed the origin.
pub fn naive_owj(a: &Automaton, word: &[usize]) -> NaiveRun {
    let mut tape: Vec<(usize, usize)> = word.iter().copied().enumerate().collect();
    let mut q = a.start();
    let mut visited: Vec<(usize, bool)> = Vec::new();
    loop {
        if tape.is_empty() {
            break;
        }
        let readable = tape.iter().position(|&(_, s)| a.delta(q, s).is_some());
        match readable {
            None => {
                for &(p, _) in &tape {
                    visited.push((p, false));
                }
                break;
            }
            Some(i) => {
                for &(p, _) in &tape[..i] {
                    visited.push((p, false));
                }
                let (p, s) = tape[i];
                visited.push((p, true));
                q = a.delta(q, s).unwrap();
                let mut next: Vec<(usize, usize)> = tape[i + 1..].to_vec();
                next.extend_from_slice(&tape[..i]);
                tape = next;
            }
        }
    }
    let mut reads_per_sweep: Vec<Vec<usize>> = Vec::new();
    let mut last: Option<usize> = None;
    for &(p, read) in &visited {
        if last.is_none_or(|l| p < l) {
            reads_per_sweep.push(Vec::new());
        }
        last = Some(p);
        if read {
            reads_per_sweep.last_mut().unwrap().push(p + 1);
        }
    }
    let mut residue: Vec<(usize, usize)> = tape.clone();
    residue.sort();
    let reads = visited.iter().filter(|v| v.1).count();
    NaiveRun {
        accepted: tape.is_empty() && a.is_accepting(q),
        final_state: q,
        sweeps: reads_per_sweep.len(),
        skips: visited.len() - reads,
        reads,
        reads_per_sweep,
        residue: residue.into_iter().map(|(_, s)| s).collect(),
    }
}

/// Number of Myhill–Nerode classes among reachable states, by the
/// table-filling algorithm on the sink-completed machine.
pub fn distinguishable_classes(a: &Automaton) -> usize {
    let a = a.completed();
    let n = a.n_states();
    let k = a.alphabet().len();
    let mut reach = vec![false; n];
    let mut stack = vec![a.start()];
    reach[a.start()] = true;
    while let Some(q) = stack.pop() {
        for s in 0..k {
            let t = a.delta(q, s).unwrap();
            if !reach[t] {
                reach[t] = true;
                stack.push(t);
            }
        }
    }
    let states: Vec<usize> = (0..n).filter(|&q| reach[q]).collect();
    let mut marked = vec![vec![false; n]; n];
    for &p in &states {
        for &q in &states {
            marked[p][q] = a.is_accepting(p) != a.is_accepting(q);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &p in &states {
            for &q in &states {
                if marked[p][q] {
                    continue;
                }
                if (0..k).any(|s| marked[a.delta(p, s).unwrap()][a.delta(q, s).unwrap()]) {
                    marked[p][q] = true;
                    changed = true;
                }
            }
        }
    }
    // count classes: a state starts a new class if unmarked against no earlier state
    let mut classes = 0;
    for (i, &p) in states.iter().enumerate() {
        if states[..i].iter().all(|&q| marked[p][q]) {
            classes += 1;
        }
    }
    classes
}

/// All words over `k` letters of length exactly `n`, lexicographic.
pub fn all_words(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn balanced(w: &[usize]) -> bool {
    let a = w.iter().filter(|&&s| s == 0).count();
    2 * a == w.len()
}
