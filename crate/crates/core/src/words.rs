// Shortlex enumeration helpers shared by analysis and langtools.

use crate::automaton::{Symbol, Word};

/// `k^n`, or `None` on overflow.
pub(crate) fn count_of_length(k: usize, n: usize) -> Option<u64> {
    (k as u64).checked_pow(n.try_into().ok()?)
}

/// `sum_{i <= n} k^i`, or `None` on overflow.
pub(crate) fn count_up_to(k: usize, n: usize) -> Option<u64> {
    (0..=n).try_fold(0u64, |acc, i| acc.checked_add(count_of_length(k, i)?))
}

/// The `index`-th word of length `n` in lexicographic (symbol id) order.
pub(crate) fn nth_word(k: usize, n: usize, mut index: u64, buf: &mut Vec<Symbol>) {
    buf.clear();
    buf.resize(n, 0);
    for slot in buf.iter_mut().rev() {
        *slot = (index % k as u64) as Symbol;
        index /= k as u64;
    }
}

/// All words of length `n`, lexicographic. Caller checks the count first.
pub(crate) fn words_of_length(k: usize, n: usize) -> impl Iterator<Item = Word> {
    let total = count_of_length(k, n).unwrap_or(0);
    (0..total).map(move |i| {
        let mut buf = Vec::with_capacity(n);
        nth_word(k, n, i, &mut buf);
        Word(buf)
    })
}

/// All words of length at most `n` in shortlex order.
pub(crate) fn words_up_to(k: usize, n: usize) -> impl Iterator<Item = Word> {
    (0..=n).flat_map(move |len| words_of_length(k, len))
}

/// Position of `w` in shortlex order over a `k`-letter alphabet.
pub(crate) fn shortlex_index(k: usize, w: &[Symbol]) -> u64 {
    let offset = if w.is_empty() {
        0
    } else {
        count_up_to(k, w.len() - 1).expect("word index overflow")
    };
    offset + w.iter().fold(0u64, |acc, &s| acc * k as u64 + s as u64)
}
