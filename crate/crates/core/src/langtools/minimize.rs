use std::collections::{HashMap, VecDeque};

use crate::automaton::{Automaton, StateId};

use super::LangError;

/// Minimal complete DFA for the classical language of `a`.
///
/// Partial machines are first completed with a sink unless
/// `require_complete` is set, in which case they are rejected with
/// [`LangError::NotComplete`]. Unreachable states are dropped and
/// indistinguishable ones merged by partition refinement. Output states are
/// numbered in BFS order from the start (symbols in id order) and keep the
/// name of their first-discovered member, so isomorphic inputs give equal
/// tables.
///
/// This is classical minimization only. It says nothing about the machine's
/// one-way jumping language.
pub fn minimize(a: &Automaton, require_complete: bool) -> Result<Automaton, LangError> {
    if !a.is_complete() && require_complete {
        return Err(LangError::NotComplete);
    }
    let a = a.completed();
    let k = a.alphabet().len();

    let order = bfs_order(&a, |q, s| a.delta(q, s).expect("complete"));
    // initial split: accepting vs not, numbered by first occurrence
    let mut class: Vec<usize> = vec![usize::MAX; a.n_states()];
    let mut first: HashMap<bool, usize> = HashMap::new();
    for &q in &order {
        let next = first.len();
        class[q] = *first.entry(a.is_accepting(q)).or_insert(next);
    }
    let mut count = first.len();
    loop {
        let mut sigs: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut refined = vec![usize::MAX; a.n_states()];
        for &q in &order {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[q]);
            sig.extend((0..k).map(|s| class[a.delta(q, s).expect("complete")]));
            let next = sigs.len();
            refined[q] = *sigs.entry(sig).or_insert(next);
        }
        let new_count = sigs.len();
        class = refined;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    // representative transition table over classes
    let mut rep: Vec<Option<StateId>> = vec![None; count];
    for &q in &order {
        rep[class[q]].get_or_insert(q);
    }
    let rep: Vec<StateId> = rep
        .into_iter()
        .map(|r| r.expect("every class has a member"))
        .collect();
    let start_class = class[a.start()];
    let canon = bfs_order_from(count, k, start_class, |c, s| {
        class[a.delta(rep[c], s).expect("complete")]
    });
    let mut new_id = vec![0; count];
    for (i, &c) in canon.iter().enumerate() {
        new_id[c] = i;
    }

    let mut delta = Vec::with_capacity(count * k);
    let mut names = Vec::with_capacity(count);
    let mut accepting = Vec::new();
    for (i, &c) in canon.iter().enumerate() {
        let q = rep[c];
        names.push(a.state_name(q).to_string());
        if a.is_accepting(q) {
            accepting.push(i);
        }
        for s in 0..k {
            delta.push(Some(new_id[class[a.delta(q, s).expect("complete")]]));
        }
    }
    Ok(
        Automaton::from_parts(a.alphabet().clone(), names, delta, 0, &accepting)
            .expect("quotient is well formed"),
    )
}

fn bfs_order(a: &Automaton, next: impl Fn(StateId, usize) -> StateId) -> Vec<StateId> {
    bfs_order_from(a.n_states(), a.alphabet().len(), a.start(), next)
}

fn bfs_order_from(
    n: usize,
    k: usize,
    start: usize,
    next: impl Fn(usize, usize) -> usize,
) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(q) = queue.pop_front() {
        for s in 0..k {
            let t = next(q, s);
            if !seen[t] {
                seen[t] = true;
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Alphabet;
    use crate::langtools::families::{kth_last, lab};
    use crate::langtools::subset::{subset_construction, DEFAULT_SUBSET_CAP};

    #[test]
    fn merges_duplicate_states() {
        // q1 and q2 are copies
        let a = Automaton::from_table(
            Alphabet::binary(),
            3,
            vec![Some(1), Some(2), Some(0), Some(0), Some(0), Some(0)],
            0,
            &[1, 2],
        )
        .unwrap();
        let m = minimize(&a, true).unwrap();
        assert_eq!(m.n_states(), 2);
    }

    #[test]
    fn single_state_is_fixed_point() {
        let a =
            Automaton::from_table(Alphabet::binary(), 1, vec![Some(0), Some(0)], 0, &[0]).unwrap();
        assert_eq!(minimize(&a, true).unwrap(), a);
    }

    #[test]
    fn partial_needs_permission() {
        assert_eq!(minimize(&lab(), true), Err(LangError::NotComplete));
        let m = minimize(&lab(), false).unwrap();
        // (ab)* needs start, after-a and sink
        assert_eq!(m.n_states(), 3);
        assert!(m.is_complete());
    }

    #[test]
    fn kth_last_subset_dfa_is_minimal() {
        let d = subset_construction(&kth_last(3).unwrap(), DEFAULT_SUBSET_CAP).unwrap();
        let m = minimize(&d, true).unwrap();
        assert_eq!(m.n_states(), 8);
        assert_eq!(minimize(&m, true).unwrap(), m);
    }

    #[test]
    fn drops_unreachable() {
        let a = Automaton::from_table(
            Alphabet::binary(),
            3,
            vec![Some(0), Some(0), Some(2), Some(2), Some(1), Some(1)],
            0,
            &[0],
        )
        .unwrap();
        assert_eq!(minimize(&a, true).unwrap().n_states(), 1);
    }
}
