//! Measures driven by inversions and by how far elements sit from home.

use alloc::vec;
use alloc::vec::Vec;

use super::ranks;

/// Number of pairs `i < j` with `x_i > x_j`, by merge counting.
pub fn inv<K: Ord>(keys: &[K]) -> u64 {
    inv_ranked(&ranks(keys))
}

pub(crate) fn inv_ranked(r: &[usize]) -> u64 {
    let mut v = r.to_vec();
    let mut aux = vec![0; v.len()];
    count_split(&mut v, &mut aux)
}

fn count_split(v: &mut [usize], aux: &mut [usize]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = count_split(&mut v[..mid], &mut aux[..mid]);
    count += count_split(&mut v[mid..], &mut aux[mid..]);
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if v[j] < v[i] {
            // v[j] jumps over everything left in the first half.
            count += (mid - i) as u64;
            aux[k] = v[j];
            j += 1;
        } else {
            aux[k] = v[i];
            i += 1;
        }
        k += 1;
    }
    aux[k..k + mid - i].copy_from_slice(&v[i..mid]);
    k += mid - i;
    aux[k..].copy_from_slice(&v[j..]);
    v.copy_from_slice(aux);
    count
}

/// Largest `j - i` over inversions `i < j`, `x_i > x_j`.
pub fn dis<K: Ord>(keys: &[K]) -> u64 {
    dis_ranked(&ranks(keys))
}

pub(crate) fn dis_ranked(r: &[usize]) -> u64 {
    let n = r.len();
    // suffix_min[j] = min(r[j..]); nondecreasing in j.
    let mut suffix_min = vec![usize::MAX; n];
    let mut cur = usize::MAX;
    for j in (0..n).rev() {
        cur = cur.min(r[j]);
        suffix_min[j] = cur;
    }
    (0..n)
        .map(|i| {
            // Last j with some smaller element at or after it.
            let last = suffix_min.partition_point(|&m| m < r[i]);
            last.saturating_sub(1).saturating_sub(i) as u64
        })
        .max()
        .unwrap_or(0)
}

/// Largest distance between an element's position and its sorted position.
pub fn max_disp<K: Ord>(keys: &[K]) -> u64 {
    max_disp_ranked(&ranks(keys))
}

pub(crate) fn max_disp_ranked(r: &[usize]) -> u64 {
    r.iter()
        .enumerate()
        .map(|(i, &k)| i.abs_diff(k) as u64)
        .max()
        .unwrap_or(0)
}

/// Minimum number of exchanges to sort: `n` minus the number of cycles of
/// the rank permutation.
pub fn exc<K: Ord>(keys: &[K]) -> u64 {
    exc_ranked(&ranks(keys))
}

pub(crate) fn exc_ranked(r: &[usize]) -> u64 {
    let mut seen: Vec<bool> = vec![false; r.len()];
    let mut cycles = 0u64;
    for start in 0..r.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = r[i];
        }
    }
    r.len() as u64 - cycles
}
