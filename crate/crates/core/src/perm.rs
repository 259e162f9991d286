//! Permutation statistics on words `σ = σ_1 … σ_n` over `{1, …, n}`.

use alloc::vec;
use alloc::vec::Vec;

/// Descent positions `i ∈ [n−1]` with `σ_i > σ_{i+1}` (1-based).
pub fn descents(sigma: &[u32]) -> Vec<usize> {
    sigma
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Sum of the descent positions.
pub fn maj(sigma: &[u32]) -> usize {
    descents(sigma).into_iter().sum()
}

/// Number of pairs `i < j` with `σ_i > σ_j`.
pub fn inv(sigma: &[u32]) -> usize {
    let mut count = 0;
    for (i, a) in sigma.iter().enumerate() {
        count += sigma[i + 1..].iter().filter(|&b| a > b).count();
    }
    count
}

/// Inverse permutation; `sigma` must be a permutation of `1..=n`.
pub fn inverse(sigma: &[u32]) -> Vec<u32> {
    let mut out = vec![0; sigma.len()];
    for (i, &v) in sigma.iter().enumerate() {
        out[v as usize - 1] = i as u32 + 1;
    }
    out
}

/// Foata's second fundamental transformation, with `maj(σ) = inv(φ(σ))`.
///
/// Builds `γ_1 = σ_1`, then for each next letter `x`: if the last letter of
/// `γ_k` exceeds `x`, cut `γ_k` after every letter greater than `x`,
/// otherwise after every letter smaller than `x`; rotate each block one step
/// to the right and append `x`.
pub fn foata(sigma: &[u32]) -> Vec<u32> {
    let Some((&first, rest)) = sigma.split_first() else {
        return Vec::new();
    };
    let mut gamma = vec![first];
    for &x in rest {
        let last = *gamma.last().expect("nonempty");
        let cut_after = |v: u32| if last > x { v > x } else { v < x };
        let mut next = Vec::with_capacity(gamma.len() + 1);
        let mut start = 0;
        for (i, &v) in gamma.iter().enumerate() {
            if cut_after(v) {
                let block = &gamma[start..=i];
                next.push(block[block.len() - 1]);
                next.extend_from_slice(&block[..block.len() - 1]);
                start = i + 1;
            }
        }
        debug_assert_eq!(start, gamma.len(), "last letter always closes a block");
        next.push(x);
        gamma = next;
    }
    gamma
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn permutations(n: u32) -> Vec<Vec<u32>> {
        fn go(prefix: &mut Vec<u32>, left: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if left.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..left.len() {
                let v = left.remove(i);
                prefix.push(v);
                go(prefix, left, out);
                prefix.pop();
                left.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
        out
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(descents(&[3, 1, 2]), vec![1]);
        assert_eq!(maj(&[3, 1, 2]), 1);
        assert_eq!(inv(&[3, 1, 2]), 2);
        assert_eq!((maj(&[1, 2, 3, 4]), inv(&[1, 2, 3, 4])), (0, 0));
        assert!(descents(&[1, 2, 3]).is_empty());
        assert_eq!((maj(&[2, 1]), inv(&[2, 1])), (1, 1));
        assert_eq!(inverse(&[3, 1, 2]), vec![2, 3, 1]);
    }

    #[test]
    fn foata_examples() {
        assert_eq!(foata(&[3, 1, 2]), vec![1, 3, 2]);
        assert_eq!(foata(&[1, 2, 3, 4]), vec![1, 2, 3, 4]);
        assert!(foata(&[]).is_empty());
    }

    #[test]
    fn foata_is_a_maj_to_inv_bijection() {
        for n in 1..=6 {
            let perms = permutations(n);
            let mut image = BTreeSet::new();
            for s in &perms {
                let f = foata(s);
                assert_eq!(maj(s), inv(&f), "{s:?}");
                assert_eq!(descents(&inverse(s)), descents(&inverse(&f)), "{s:?}");
                image.insert(f);
            }
            assert_eq!(image.len(), perms.len());
        }
    }
}
