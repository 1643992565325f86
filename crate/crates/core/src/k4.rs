//! The Klein four-group `K4 = <a, b, c | a² = b² = c² = abc = 1>` and the
//! three edge colors it carries.
//!
//! Elements are stored as two bits `(z1, z2)` of `Z2 x Z2` with
//! `a = (1, 0)`, `b = (0, 1)` and `c = (1, 1)`, so the group product is a
//! bitwise XOR.

use core::fmt;
use core::ops::Mul;

/// An element of the Klein four-group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct K4Element(u8);

impl K4Element {
    pub const ONE: K4Element = K4Element(0b00);
    pub const A: K4Element = K4Element(0b01);
    pub const B: K4Element = K4Element(0b10);
    pub const C: K4Element = K4Element(0b11);

    /// All four elements in the order `1, a, b, c`.
    pub const ALL: [K4Element; 4] = [Self::ONE, Self::A, Self::B, Self::C];

    pub const fn from_bits(z1: bool, z2: bool) -> Self {
        K4Element((z1 as u8) | ((z2 as u8) << 1))
    }

    pub const fn bits(self) -> (bool, bool) {
        (self.0 & 1 == 1, self.0 & 2 == 2)
    }

    pub const fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub const fn inverse(self) -> Self {
        self
    }

    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '1',
            1 => 'a',
            2 => 'b',
            _ => 'c',
        }
    }

    pub fn from_symbol(ch: char) -> Option<Self> {
        match ch {
            '1' => Some(Self::ONE),
            'a' => Some(Self::A),
            'b' => Some(Self::B),
            'c' => Some(Self::C),
            _ => None,
        }
    }

    /// The non-identity elements are exactly the edge colors.
    pub fn as_color(self) -> Option<Color> {
        match self.0 {
            1 => Some(Color::A),
            2 => Some(Color::B),
            3 => Some(Color::C),
            _ => None,
        }
    }
}

impl Mul for K4Element {
    type Output = K4Element;

    // the group law is bitwise xor
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: K4Element) -> K4Element {
        K4Element(self.0 ^ rhs.0)
    }
}

impl fmt::Display for K4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

pub fn k4_mul(x: K4Element, y: K4Element) -> K4Element {
    x * y
}

/// Left-to-right product of a sequence of elements, starting at the identity.
pub fn k4_word_product<I>(word: I) -> K4Element
where
    I: IntoIterator<Item = K4Element>,
{
    word.into_iter().fold(K4Element::ONE, k4_mul)
}

/// An edge color: one of the three non-identity elements of `K4`.
///
/// The ordering `a < b < c` is the lexicographic order used for every
/// serialized color string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Color {
    A = 0,
    B = 1,
    C = 2,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn from_index(i: usize) -> Color {
        match i {
            0 => Color::A,
            1 => Color::B,
            _ => Color::C,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Color::A => 'a',
            Color::B => 'b',
            Color::C => 'c',
        }
    }

    pub fn from_symbol(ch: char) -> Option<Color> {
        match ch {
            'a' => Some(Color::A),
            'b' => Some(Color::B),
            'c' => Some(Color::C),
            _ => None,
        }
    }

    pub const fn to_k4(self) -> K4Element {
        match self {
            Color::A => K4Element::A,
            Color::B => K4Element::B,
            Color::C => K4Element::C,
        }
    }

    /// The color different from both `self` and `other`, if they differ.
    pub const fn third(self, other: Color) -> Option<Color> {
        if self as u8 == other as u8 {
            None
        } else {
            Some(Color::from_index(3 - self as usize - other as usize))
        }
    }

    /// The other two colors `(y, z)` with `y < z`.
    pub const fn others(self) -> (Color, Color) {
        match self {
            Color::A => (Color::B, Color::C),
            Color::B => (Color::A, Color::C),
            Color::C => (Color::A, Color::B),
        }
    }
}

impl From<Color> for K4Element {
    fn from(c: Color) -> K4Element {
        c.to_k4()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    use K4Element as E;

    #[test]
    fn multiplication_table() {
        assert_eq!(E::A * E::A, E::ONE);
        assert_eq!(E::A * E::B, E::C);
        assert_eq!(E::ONE * E::C, E::C);
        assert_eq!(E::B * E::C, E::A);
        assert_eq!(E::C * E::A, E::B);
    }

    #[test]
    fn presentation_relations_hold() {
        for g in [E::A, E::B, E::C] {
            assert!((g * g).is_identity());
        }
        assert_eq!(k4_word_product([E::A, E::B, E::C]), E::ONE);
    }

    #[test]
    fn word_products() {
        assert_eq!(k4_word_product(Vec::new()), E::ONE);
        assert_eq!(k4_word_product([E::A, E::B, E::C]), E::ONE);
        assert_eq!(k4_word_product(vec![E::A, E::A, E::B, E::B, E::C, E::C]), E::ONE);
    }

    #[test]
    fn bits_encoding() {
        assert_eq!(E::from_bits(false, false), E::ONE);
        assert_eq!(E::from_bits(true, false), E::A);
        assert_eq!(E::from_bits(false, true), E::B);
        assert_eq!(E::from_bits(true, true), E::C);
        for x in E::ALL {
            let (z1, z2) = x.bits();
            assert_eq!(E::from_bits(z1, z2), x);
            assert_eq!(E::from_symbol(x.symbol()), Some(x));
        }
    }

    #[test]
    fn colors_are_the_non_identity_elements() {
        for c in Color::ALL {
            assert_eq!(c.to_k4().as_color(), Some(c));
            let (y, z) = c.others();
            assert_eq!(y.third(z), Some(c));
            assert_eq!(c.to_k4() * y.to_k4() * z.to_k4(), E::ONE);
        }
        assert_eq!(E::ONE.as_color(), None);
        assert_eq!(Color::A.third(Color::A), None);
    }

    fn element() -> impl Strategy<Value = E> {
        (0usize..4).prop_map(|i| E::ALL[i])
    }

    proptest! {
        #[test]
        fn involution(x in element()) {
            prop_assert_eq!(k4_mul(x, x), E::ONE);
        }

        #[test]
        fn commutative(x in element(), y in element()) {
            prop_assert_eq!(k4_mul(x, y), k4_mul(y, x));
        }

        #[test]
        fn product_is_permutation_invariant(
            mut w in proptest::collection::vec(element(), 0..12),
            seed in any::<u64>(),
        ) {
            let before = k4_word_product(w.iter().copied());
            // deterministic Fisher-Yates driven by the seed
            let mut s = seed;
            for i in (1..w.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (s >> 33) as usize % (i + 1);
                w.swap(i, j);
            }
            prop_assert_eq!(k4_word_product(w), before);
        }
    }
}
