use std::collections::{HashMap, VecDeque};

use crate::automaton::{Automaton, Nfa, StateId, Transitions};

use super::LangError;

pub const DEFAULT_SUBSET_CAP: usize = 1 << 20;

/// Determinizes `nfa`, keeping only subsets reachable from `{start}`.
///
/// The result is complete; the empty subset shows up as a sink when it is
/// reachable. States are numbered in BFS discovery order and named after
/// their members, e.g. `{q0,q2}`.
pub fn subset_construction(nfa: &Nfa, cap: usize) -> Result<Automaton, LangError> {
    let k = nfa.alphabet().len();
    let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut delta: Vec<Option<StateId>> = Vec::new();
    let mut queue = VecDeque::new();

    let start = vec![nfa.start()];
    ids.insert(start.clone(), 0);
    subsets.push(start);
    queue.push_back(0);

    while let Some(id) = queue.pop_front() {
        for s in 0..k {
            let mut next: Vec<StateId> = subsets[id]
                .iter()
                .flat_map(|&q| nfa.successors(q, s).iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            let target = match ids.get(&next) {
                Some(&t) => t,
                None => {
                    let t = subsets.len();
                    if t >= cap {
                        return Err(LangError::StateCapExceeded { cap });
                    }
                    ids.insert(next.clone(), t);
                    subsets.push(next);
                    queue.push_back(t);
                    t
                }
            };
            // BFS pops ids in order, so row `id` is filled exactly now
            debug_assert_eq!(delta.len(), id * k + s);
            delta.push(Some(target));
        }
    }

    let names = subsets
        .iter()
        .map(|set| {
            let inner: Vec<&str> = set.iter().map(|&q| nfa.state_name(q)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let accepting: Vec<StateId> = subsets
        .iter()
        .enumerate()
        .filter(|(_, set)| set.iter().any(|&q| nfa.is_accepting(q)))
        .map(|(i, _)| i)
        .collect();
    Ok(
        Automaton::from_parts(nfa.alphabet().clone(), names, delta, 0, &accepting)
            .expect("subset ids are dense"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langtools::families::{kth_last, lab};

    #[test]
    fn kth_last_blows_up() {
        let d = subset_construction(&kth_last(3).unwrap(), DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(d.n_states(), 8);
        assert!(d.is_complete());
        assert_eq!(d.state_name(0), "{q0}");
        let d = subset_construction(&kth_last(8).unwrap(), DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(d.n_states(), 256);
    }

    #[test]
    fn deterministic_input_keeps_reachable_part() {
        // lab is partial, so the empty subset appears as one extra sink
        let d = subset_construction(&lab().to_nfa(), DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(d.n_states(), 3);
        let c = crate::langtools::families::complete_random(5, 11).unwrap();
        let d = subset_construction(&c.to_nfa(), DEFAULT_SUBSET_CAP).unwrap();
        let reachable = reachable_count(&c);
        assert_eq!(d.n_states(), reachable);
    }

    fn reachable_count(a: &Automaton) -> usize {
        let mut seen = vec![false; a.n_states()];
        let mut stack = vec![a.start()];
        seen[a.start()] = true;
        while let Some(q) = stack.pop() {
            for s in 0..a.alphabet().len() {
                if let Some(t) = a.delta(q, s) {
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        seen.iter().filter(|&&b| b).count()
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            subset_construction(&kth_last(5).unwrap(), 10),
            Err(LangError::StateCapExceeded { cap: 10 })
        );
    }
}
