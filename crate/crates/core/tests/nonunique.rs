mod common;

use std::collections::HashMap;

use common::all_words;
use owjfa::engines::run_owj;
use owjfa::{parse_automaton, Alphabet, Automaton, Machine, Word};

const WINDOW: usize = 10;

fn window(a: &Automaton) -> Vec<bool> {
    (0..=WINDOW)
        .flat_map(|n| all_words(2, n))
        .map(|w| run_owj(a, &Word(w), false).unwrap().0.accepted)
        .collect()
}

fn machines(n: usize) -> Vec<Automaton> {
    let slots = n * 2;
    let mut out = Vec::new();
    for code in 0..(n + 1).pow(slots as u32) {
        let mut c = code;
        let delta: Vec<Option<usize>> = (0..slots)
            .map(|_| {
                let d = c % (n + 1);
                c /= n + 1;
                (d > 0).then(|| d - 1)
            })
            .collect();
        for acc in 0..(1usize << n) {
            let accepting: Vec<usize> = (0..n).filter(|q| acc >> q & 1 == 1).collect();
            out.push(
                Automaton::from_table(Alphabet::binary(), n, delta.clone(), 0, &accepting).unwrap(),
            );
        }
    }
    out
}

fn all_reachable(a: &Automaton) -> bool {
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
    seen.into_iter().all(|x| x)
}

fn load(text: &str) -> Automaton {
    match parse_automaton(text).unwrap() {
        Machine::Dfa(a) => a,
        Machine::Nfa(_) => panic!("fixture must be deterministic"),
    }
}

#[test]
fn two_state_machines_with_equal_windows() {
    let one_state: Vec<Vec<bool>> = machines(1).iter().map(window).collect();
    let mut groups: HashMap<Vec<bool>, Vec<Automaton>> = HashMap::new();
    for a in machines(2).into_iter().filter(all_reachable) {
        groups.entry(window(&a)).or_default().push(a);
    }
    let found: Vec<Vec<Automaton>> = groups
        .into_iter()
        .filter(|(w, ms)| ms.len() > 1 && !one_state.contains(w))
        .map(|(_, ms)| ms)
        .collect();

    let first = load(include_str!("../fixtures/nonunique_a.aut"));
    let second = load(include_str!("../fixtures/nonunique_b.aut"));
    // with the start state fixed, two 2-state machines are isomorphic only if equal
    assert_ne!(first, second);
    assert!(all_reachable(&first) && all_reachable(&second));
    assert_eq!(window(&first), window(&second));
    assert!(!one_state.contains(&window(&first)));
    let group = found
        .iter()
        .find(|g| g.contains(&first))
        .expect("fixture pair is among the search results");
    assert_eq!(group.len(), 2);
    assert!(group.contains(&second));
}
