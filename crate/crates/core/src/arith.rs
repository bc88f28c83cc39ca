//! Arithmetic kernel: triangular coordinates, the row-major order, the
//! column-encoding predicates, and the usual numerical predicates.
//!
//! Every natural number `x` lives in a lower-triangular matrix whose `i`-th
//! column holds the `i + 1` consecutive numbers starting at the triangular
//! number `tri(i)`. `coords` recovers the (column, row) cell of `x`,
//! `index_of` goes back.

/// The (column, row, q-value) cell of a natural number.
///
/// Invariants: `x == q + r`, `r <= c`, and `q == tri(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriCoord {
    pub x: u64,
    pub c: u64,
    pub r: u64,
    pub q: u64,
}

/// The `i`-th triangular number `i * (i + 1) / 2`.
///
/// Panics if the result does not fit in a `u64`.
pub fn tri(i: u64) -> u64 {
    let wide = i as u128 * (i as u128 + 1) / 2;
    u64::try_from(wide).expect("triangular number overflows u64")
}

/// Decompose `x` into its cell. Uses the integer square root of `8x + 1`
/// with a fix-up loop, so it is exact for every `u64`.
pub fn coords(x: u64) -> TriCoord {
    let mut c = ((8 * x as u128 + 1).isqrt() as u64).saturating_sub(1) / 2;
    // isqrt is exact, but guard the derived index against rounding at the
    // column boundaries.
    while tri(c + 1) <= x {
        c += 1;
    }
    while tri(c) > x {
        c -= 1;
    }
    let q = tri(c);
    TriCoord { x, c, r: x - q, q }
}

/// The number sitting in column `c`, row `r`. Inverse of [`coords`].
///
/// Panics if `r > c`: the matrix has no such cell.
pub fn index_of(c: u64, r: u64) -> u64 {
    assert!(r <= c, "no cell at column {c}, row {r}: row exceeds column");
    tri(c) + r
}

/// The left-to-right, bottom-to-top row-major order on the matrix.
pub fn ordc_less(x: u64, y: u64) -> bool {
    let (a, b) = (coords(x), coords(y));
    a.r < b.r || (a.r == b.r && a.c < b.c)
}

/// Bit `i` of the binary representation of `a`.
pub fn bit(a: u64, i: u64) -> bool {
    i < 64 && (a >> i) & 1 == 1
}

/// Membership in `C`: bit `r(x)` of `c(x) + 1`.
pub fn in_c(x: u64) -> bool {
    let t = coords(x);
    bit(t.c + 1, t.r)
}

/// Membership in `Q`: bit `r(x)` of `tri(c(x) + 1)`.
pub fn in_q(x: u64) -> bool {
    let t = coords(x);
    bit(tri(t.c + 1), t.r)
}

/// Graph of addition: `a + b == c`.
pub fn plus(a: u64, b: u64, c: u64) -> bool {
    a.checked_add(b) == Some(c)
}

/// Graph of multiplication: `a * b == c`.
pub fn times(a: u64, b: u64, c: u64) -> bool {
    a.checked_mul(b) == Some(c)
}

/// Perfect squares.
pub fn square(a: u64) -> bool {
    let s = a.isqrt();
    s * s == a
}

/// Graph of exponentiation `a^b == c`, with `0^0 == 1`.
pub fn exp(a: u64, b: u64, c: u64) -> bool {
    if b == 0 {
        return c == 1;
    }
    if a == 0 {
        return c == 0;
    }
    if a == 1 {
        return c == 1;
    }
    let mut acc: u64 = 1;
    for _ in 0..b {
        acc = match acc.checked_mul(a) {
            Some(v) if v <= c => v,
            // already past c, and powers of a >= 2 only grow
            _ => return false,
        };
    }
    acc == c
}

/// Carry into bit position `j` when adding `a + b` by grade-school binary
/// addition. Independent of [`bit`]-level reasoning elsewhere: recomputes
/// the carry chain digit by digit.
pub fn addition_carry_into(a: u64, b: u64, j: u64) -> bool {
    if j >= 64 {
        // a + b < 2^65; positions beyond 64 never receive a carry from u64
        // inputs unless the sum overflows, which u64 addition here cannot
        // represent anyway; treat via u128 to stay exact.
        let sum = a as u128 + b as u128;
        let trunc = (a as u128 & ((1u128 << j.min(127)) - 1)) + (b as u128 & ((1u128 << j.min(127)) - 1));
        return j < 128 && sum >= (1u128 << j) && trunc >> j != 0;
    }
    let mut carry = false;
    for i in 0..j {
        let ab = bit(a, i) as u8 + bit(b, i) as u8 + carry as u8;
        carry = ab >= 2;
    }
    carry
}
