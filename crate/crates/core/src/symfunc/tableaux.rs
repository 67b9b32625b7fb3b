//! Semistandard tableaux by successive horizontal strips.

use super::check_sizes;
use crate::error::Result;
use crate::objects::{partitions, Partition};

/// `K_{lambda,mu}`: semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    check_sizes(lambda, mu)?;
    Ok(kostka_composition(lambda, mu.parts()))
}

/// Kostka number for an arbitrary weak composition as content. Entry `i+1`
/// appears `content[i]` times.
pub fn kostka_composition(lambda: &Partition, content: &[usize]) -> u64 {
    if content.iter().sum::<usize>() != lambda.size() {
        return 0;
    }
    let mut shape = vec![0usize; lambda.len()];
    count_chains(lambda.parts(), content, &mut shape)
}

fn count_chains(target: &[usize], content: &[usize], shape: &mut Vec<usize>) -> u64 {
    match content.split_first() {
        None => u64::from(shape.as_slice() == target),
        Some((&c, rest)) => {
            let old = shape.clone();
            let mut total = 0;
            add_strip(target, &old, 0, c, shape, &mut |s| {
                total += count_chains(target, rest, s);
            });
            *shape = old;
            total
        }
    }
}

/// Enumerates horizontal strips of size `remaining` added to `old`, inside
/// `target`, row by row from `row`. A row may grow up to the old length of
/// the row below it (rows indexed from the longest).
fn add_strip(
    target: &[usize],
    old: &[usize],
    row: usize,
    remaining: usize,
    shape: &mut Vec<usize>,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if remaining == 0 {
        shape[row..].copy_from_slice(&old[row..]);
        visit(shape);
        return;
    }
    if row == old.len() {
        return;
    }
    let cap = if row == 0 { target[0] } else { target[row].min(old[row - 1]) };
    let room = cap.saturating_sub(old[row]);
    for add in (0..=room.min(remaining)).rev() {
        shape[row] = old[row] + add;
        add_strip(target, old, row + 1, remaining - add, shape, visit);
    }
    shape[row] = old[row];
}

/// Kostka matrix over partitions of `n`, rows and columns in
/// lexicographically decreasing order. Entry `[i][j]` is
/// `K_{lambda_i, mu_j}`.
pub fn kostka_matrix(n: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = partitions(n);
    let m = parts
        .iter()
        .map(|l| parts.iter().map(|mu| kostka_composition(l, mu.parts()) as i64).collect())
        .collect();
    (parts, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_kostka_numbers() {
        assert_eq!(kostka(&part(&[2, 1]), &part(&[2, 1])).unwrap(), 1);
        assert_eq!(kostka(&part(&[2]), &part(&[1, 1])).unwrap(), 1);
        assert_eq!(kostka(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&part(&[1, 1]), &part(&[2])).unwrap(), 0);
        assert_eq!(kostka(&part(&[3, 2]), &part(&[1, 1, 1, 1, 1])).unwrap(), 5);
        assert_eq!(kostka(&part(&[3, 2, 1]), &part(&[2, 2, 1, 1])).unwrap(), 4);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(kostka(&part(&[2]), &part(&[1])), Err(Error::Domain(_))));
    }

    #[test]
    fn diagonal_is_one_and_matrix_is_unitriangular() {
        for n in 1..=7 {
            let (parts, k) = kostka_matrix(n);
            for i in 0..parts.len() {
                assert_eq!(k[i][i], 1);
                for j in 0..i {
                    assert_eq!(k[i][j], 0, "{} {}", parts[i], parts[j]);
                }
            }
        }
    }

    #[test]
    fn standard_tableaux_counts() {
        // f^lambda for lambda |- 5 via the hook length formula
        let expected = [(vec![5], 1), (vec![4, 1], 4), (vec![3, 2], 5), (vec![3, 1, 1], 6)];
        for (l, f) in expected {
            assert_eq!(kostka_composition(&part(&l), &[1; 5]), f);
        }
        // content order does not matter
        assert_eq!(
            kostka_composition(&part(&[3, 1]), &[1, 0, 3]),
            kostka_composition(&part(&[3, 1]), &[3, 1])
        );
    }
}
