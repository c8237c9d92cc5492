//! Canonical basis blades `e^{i1...ik}`, stored as index bitmasks.

use std::cmp::Ordering;
use std::fmt::Write as _;

/// A basis blade: bit `i-1` is set when coframe index `i` is present.
/// The empty blade is the unit `1_Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const ONE: Blade = Blade(0);

    pub const fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Single coframe direction `e^i` (1-based).
    pub fn vector(i: u32) -> Self {
        debug_assert!((1..=32).contains(&i));
        Blade(1 << (i - 1))
    }

    /// The top blade `e^{1...n}`.
    pub fn top(n: u32) -> Self {
        Blade(((1u64 << n) - 1) as u32)
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: u32) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    /// Indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let tz = bits.trailing_zeros();
            bits &= bits - 1;
            Some(tz + 1)
        })
    }

    /// Canonical text: `1`, `e12`, or `e{1,10,12}` (braced whenever `n > 9`).
    pub fn render(self, n: u32) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        if n > 9 {
            s.push('{');
            for (k, i) in self.indices().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{i}");
            }
            s.push('}');
        } else {
            for i in self.indices() {
                let _ = write!(s, "{i}");
            }
        }
        s
    }

    /// Every blade of an `n`-dimensional coframe in canonical order.
    pub fn basis(n: u32) -> Vec<Blade> {
        let mut all: Vec<Blade> = (0..(1u32 << n)).map(Blade).collect();
        all.sort();
        all
    }
}

impl Ord for Blade {
    /// Grade first, then lexicographic on the increasing index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parity of the number of pairs `(x in a, y in b)` with `x > y`: the sign
/// picked up by sorting the concatenation `a b` into increasing order.
pub(crate) fn reorder_sign(a: u32, b: u32) -> i32 {
    let mut count = 0u32;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        // bits of `a` strictly above position y
        count += (a >> y >> 1).count_ones();
    }
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
