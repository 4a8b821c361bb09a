//! Integer compositions, enumerated in lexicographic order of the part vector.

/// All `(a_1, ..., a_k)` with `a_i >= 0` and `sum a_i = n`. For `k = 0` this
/// is the single empty composition when `n = 0` and nothing otherwise.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    weak_rec(n, k, &mut cur, &mut out);
    out
}

fn weak_rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == 0 {
        if n == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if k == 1 {
        cur.push(n);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in 0..=n {
        cur.push(first);
        weak_rec(n - first, k - 1, cur, out);
        cur.pop();
    }
}

/// Compositions of `n` into `k` positive parts.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n || (k == 0 && n > 0) {
        return Vec::new();
    }
    weak_compositions(n - k, k)
        .into_iter()
        .map(|c| c.into_iter().map(|p| p + 1).collect())
        .collect()
}

/// Compositions of `n` into any number of positive parts.
pub fn positive_compositions_any_length(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    any_rec(n, &mut cur, &mut out);
    out
}

fn any_rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        return;
    }
    for first in 1..=n {
        cur.push(first);
        any_rec(n - first, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        // C(n+k-1, k-1)
        assert_eq!(weak_compositions(3, 3).len(), 10);
        assert_eq!(weak_compositions(0, 0).len(), 1);
        assert_eq!(weak_compositions(2, 0).len(), 0);
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(positive_compositions_any_length(5).len(), 16);
    }

    #[test]
    fn lexicographic() {
        assert_eq!(
            weak_compositions(2, 2),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }
}
