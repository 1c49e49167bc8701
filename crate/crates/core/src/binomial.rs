/// `C(a, k)` with the vanishing convention: zero whenever `a < k`, `a < 0`
/// or `k < 0`.
pub fn choose(a: i64, k: i64) -> u64 {
    if k < 0 || a < 0 || a < k {
        return 0;
    }
    num_integer::binomial(a as u64, k as u64)
}

#[cfg(test)]
mod tests {
    use super::choose;

    #[test]
    fn vanishing_convention() {
        assert_eq!(choose(-1, 0), 0);
        assert_eq!(choose(2, 3), 0);
        assert_eq!(choose(3, -1), 0);
        assert_eq!(choose(0, 0), 1);
    }

    #[test]
    fn pascal_rule() {
        for a in 1..30i64 {
            for k in 1..=a {
                assert_eq!(choose(a, k), choose(a - 1, k - 1) + choose(a - 1, k));
            }
        }
    }
}
