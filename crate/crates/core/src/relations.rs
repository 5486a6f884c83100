//! The length-preserving defining relations of the plactic monoid, as
//! predicates on three-letter factors.
//!
//! Knuth-type relations, for `x ≤ y < z` and `x < y ≤ z` respectively,
//! always with `z ≠ x̄`:
//!
//! ```text
//! y z x ≡ y x z        x z y ≡ z x y
//! ```
//!
//! Barred-pair relations, for `1 < x ≤ n` and `x ≤ y ≤ x̄`:
//!
//! ```text
//! y (x-1)̄ (x-1) ≡ y x x̄        x x̄ y ≡ (x-1)̄ (x-1) y
//! ```

use crate::alphabet::Letter;

pub type Triple = [Letter; 3];

fn knuth_row(x: Letter, y: Letter, z: Letter) -> bool {
    x <= y && y < z && z != x.bar()
}

fn knuth_column(x: Letter, y: Letter, z: Letter) -> bool {
    x < y && y <= z && z != x.bar()
}

/// `y` lies in `[x, x̄]` with `1 < x ≤ n`, `x` unbarred.
fn pair_range(x: Letter, y: Letter, n: u8) -> bool {
    !x.is_barred() && x.value() > 1 && x.value() <= n && x <= y && y <= x.bar()
}

/// Every three-letter word related to `t` by one Knuth-type or barred-pair
/// relation, in either direction. Rank `n` bounds the barred-pair family.
pub fn partners(t: Triple, n: u8) -> Vec<Triple> {
    let [a, b, c] = t;
    let mut out: Vec<Triple> = Vec::with_capacity(2);
    let mut add = |w: Triple| {
        if w != t && !out.contains(&w) {
            out.push(w);
        }
    };
    // y z x ≡ y x z
    if knuth_row(c, a, b) {
        add([a, c, b]);
    }
    if knuth_row(b, a, c) {
        add([a, c, b]);
    }
    // x z y ≡ z x y
    if knuth_column(a, c, b) {
        add([b, a, c]);
    }
    if knuth_column(b, c, a) {
        add([b, a, c]);
    }
    // y (x-1)̄ (x-1) ≡ y x x̄
    if b.is_barred() && !c.is_barred() && b.value() == c.value() && c.value() < n {
        let x = Letter::unbarred(c.value() + 1);
        if pair_range(x, a, n) {
            add([a, x, x.bar()]);
        }
    }
    if !b.is_barred() && c == b.bar() && pair_range(b, a, n) {
        let below = Letter::unbarred(b.value() - 1);
        add([a, below.bar(), below]);
    }
    // x x̄ y ≡ (x-1)̄ (x-1) y
    if !a.is_barred() && b == a.bar() && pair_range(a, c, n) {
        let below = Letter::unbarred(a.value() - 1);
        add([below.bar(), below, c]);
    }
    if a.is_barred() && !b.is_barred() && a.value() == b.value() && b.value() < n {
        let x = Letter::unbarred(b.value() + 1);
        if pair_range(x, c, n) {
            add([x, x.bar(), c]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::alphabet;

    fn t(s: [i32; 3]) -> Triple {
        s.map(|k| Letter::from_signed(k).unwrap())
    }

    #[test]
    fn worked_steps() {
        assert_eq!(partners(t([-4, -3, 2]), 4), vec![t([-4, 2, -3])]);
        assert_eq!(partners(t([4, -4, 2]), 4), vec![t([4, 2, -4])]);
        assert_eq!(partners(t([1, 4, 2]), 4), vec![t([4, 1, 2])]);
        assert_eq!(partners(t([2, 3, 1]), 3), vec![t([2, 1, 3])]);
        assert_eq!(partners(t([1, 2, 1]), 3), vec![t([1, 1, 2])]);
        assert_eq!(partners(t([3, -3, 1]), 3), vec![t([3, 1, -3])]);
        assert_eq!(partners(t([1, 3, 3]), 3), vec![t([3, 1, 3])]);
        assert_eq!(partners(t([2, 2, -2]), 2), vec![t([2, -1, 1])]);
    }

    #[test]
    fn excluded_by_bar_condition() {
        // x z y with z = x̄ is not a Knuth-type instance
        assert!(!partners(t([1, -1, 2]), 2).contains(&t([-1, 1, 2])));
    }

    #[test]
    fn partnership_is_symmetric() {
        for n in 1..=3u8 {
            let letters: Vec<Letter> = alphabet(n).collect();
            for &a in &letters {
                for &b in &letters {
                    for &c in &letters {
                        for p in partners([a, b, c], n) {
                            assert!(partners(p, n).contains(&[a, b, c]), "{a} {b} {c} vs {p:?}");
                        }
                    }
                }
            }
        }
    }
}
