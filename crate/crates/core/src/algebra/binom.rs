/// `binomial(a, b) mod 2` by Lucas' theorem: odd iff every bit of `b` is set
/// in `a`. Zero when `b > a`.
pub fn lucas_binom(a: u64, b: u64) -> bool {
    b <= a && a & b == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn pascal_mod2(rows: usize) -> Vec<Vec<bool>> {
        let mut t = vec![vec![false; rows + 1]; rows + 1];
        for a in 0..=rows {
            t[a][0] = true;
            for b in 1..=a {
                t[a][b] = t[a - 1][b - 1] ^ t[a - 1][b];
            }
        }
        t
    }

    #[test]
    fn matches_pascal_up_to_64() {
        let t = pascal_mod2(64);
        for a in 0..=64u64 {
            for b in 0..=64u64 {
                let expected = b <= a && t[a as usize][b as usize];
                assert_eq!(lucas_binom(a, b), expected, "C({a},{b})");
            }
        }
    }

    #[test]
    fn spot_values() {
        assert!(lucas_binom(7, 0));
        assert!(!lucas_binom(4, 2));
        assert!(lucas_binom(3, 1));
        assert!(!lucas_binom(2, 5));
    }
}
