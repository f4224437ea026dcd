//! Integer partitions in canonical non-increasing form.

/// All partitions of `n` as non-increasing vectors, in ascending
/// lexicographic order (`[1,1,...,1]` first, `[n]` last).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(n, n, &mut current, &mut out);
    out.sort();
    out
}

fn extend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        extend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of `n` with at least `min_parts` parts.
pub fn partitions_with_min_parts(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    partitions(n).into_iter().filter(|p| p.len() >= min_parts).collect()
}
