use num_traits::{One, Zero};

use super::{int, ExactRational};

/// `s_l(values)`: the sum of all products of `l` distinct entries. Gives 1 for
/// `l = 0` and 0 when `l` exceeds the number of values.
pub fn elementary_symmetric(values: &[ExactRational], l: usize) -> ExactRational {
    if l > values.len() {
        return ExactRational::zero();
    }
    elementary_symmetric_all(values).swap_remove(l)
}

/// `[s_0, s_1, …, s_k]` in one pass: the coefficients of `∏ (1 + aᵢ t)`.
pub fn elementary_symmetric_all(values: &[ExactRational]) -> Vec<ExactRational> {
    let mut e = vec![ExactRational::one()];
    for a in values {
        e.push(ExactRational::zero());
        for l in (1..e.len()).rev() {
            let term = &e[l - 1] * a;
            e[l] += term;
        }
    }
    e
}

/// `[1², 3², …, (2n−1)²]`.
pub fn odd_squares(n: usize) -> Vec<ExactRational> {
    (1..=n as i64).map(|j| int((2 * j - 1) * (2 * j - 1))).collect()
}

/// `[2², 4², …, (2m)²]`.
pub fn even_squares(m: usize) -> Vec<ExactRational> {
    (1..=m as i64).map(|j| int(4 * j * j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<ExactRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    // Oracle: enumerate every l-subset by bitmask.
    fn brute_force(values: &[ExactRational], l: usize) -> ExactRational {
        (0u32..1 << values.len())
            .filter(|mask| mask.count_ones() as usize == l)
            .map(|mask| {
                values
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| v.clone())
                    .product::<ExactRational>()
            })
            .sum()
    }

    #[test]
    fn examples() {
        assert_eq!(elementary_symmetric(&ints(&[4, 16, 36]), 0), int(1));
        assert_eq!(elementary_symmetric(&ints(&[1, 2, 3]), 2), int(11));
        assert_eq!(elementary_symmetric(&ints(&[1, 2]), 3), int(0));
        assert_eq!(elementary_symmetric(&[], 0), int(1));
    }

    #[test]
    fn lattices() {
        assert_eq!(odd_squares(3), ints(&[1, 9, 25]));
        assert_eq!(even_squares(2), ints(&[4, 16]));
        assert!(even_squares(0).is_empty());
    }

    proptest! {
        #[test]
        fn matches_subset_enumeration(v in prop::collection::vec(-20i64..20, 0..9), l in 0usize..10) {
            let values = ints(&v);
            prop_assert_eq!(elementary_symmetric(&values, l), brute_force(&values, l));
        }
    }
}
