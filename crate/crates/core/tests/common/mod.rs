#![allow(dead_code)]

use cxkit::Word;

/// Every word of length exactly `len` over `rank` letters, in lexicographic order.
pub fn words_of_length(rank: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (0..rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

/// Every word of length at most `max_len`.
pub fn words_up_to(rank: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(rank, l)).collect()
}

/// One-line notation of the product `s_{w_1} ... s_{w_k}` in the symmetric
/// group on `n + 1` points, `s_i` swapping positions `i` and `i + 1`.
pub fn permutation(n: usize, w: &Word) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n + 1).collect();
    for &s in w.letters() {
        p.swap(s, s + 1);
    }
    p
}

pub fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// Whether `p` contains the classical pattern `pat` (both one-line, 1-based values).
pub fn contains_pattern(p: &[usize], pat: &[usize]) -> bool {
    fn go(p: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == pat.len() {
            return (0..pat.len())
                .all(|a| (0..pat.len()).all(|b| (pat[a] < pat[b]) == (p[chosen[a]] < p[chosen[b]])));
        }
        for i in start..p.len() {
            chosen.push(i);
            if go(p, pat, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(p, pat, 0, &mut Vec::new())
}
