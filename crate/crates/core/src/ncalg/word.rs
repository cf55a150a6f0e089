use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::lincomb::{Basis, Bidegree, BlockBasis};

/// A letter of the alphabet `{x, z}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Z,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Z => 'z',
        }
    }
}

/// A monomial of `K<x,z>`, packed into a machine word: the first letter is the
/// most significant of the `len` low bits, `z` is a set bit.
///
/// Words are ordered by weight, then depth, then lexicographically with
/// `x < z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    len: u8,
    bits: u64,
}

pub const MAX_WORD_LEN: usize = 63;

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };
    pub const X: Word = Word { len: 1, bits: 0 };
    pub const Z: Word = Word { len: 1, bits: 1 };

    pub fn empty() -> Self {
        Self::EMPTY
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(it: I) -> Self {
        let mut w = Self::EMPTY;
        for l in it {
            w = w.push(l);
        }
        w
    }

    /// `x^{e_0} z x^{e_1} z ... z x^{e_m}` from `[e_0, ..., e_m]`; an empty
    /// slice gives the empty word.
    pub fn from_x_blocks(blocks: &[usize]) -> Self {
        let mut w = Self::EMPTY;
        for (i, e) in blocks.iter().enumerate() {
            if i > 0 {
                w = w.push(Letter::Z);
            }
            w = w.concat(&Self::x_power(*e));
        }
        w
    }

    pub fn x_power(n: usize) -> Self {
        assert!(n <= MAX_WORD_LEN, "word too long");
        Word { len: n as u8, bits: 0 }
    }

    pub fn push(self, l: Letter) -> Self {
        assert!((self.len as usize) < MAX_WORD_LEN, "word too long");
        Word {
            len: self.len + 1,
            bits: (self.bits << 1) | (l == Letter::Z) as u64,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn weight(&self) -> usize {
        self.len as usize
    }

    pub fn depth(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn letter(&self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        if (self.bits >> (self.len as usize - 1 - i)) & 1 == 1 {
            Letter::Z
        } else {
            Letter::X
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(self.len() - 1))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let len = self.len as usize + other.len as usize;
        assert!(len <= MAX_WORD_LEN, "word too long");
        Word {
            len: len as u8,
            bits: (self.bits << other.len) | other.bits,
        }
    }

    /// Letters `[from, to)`.
    pub fn slice(&self, from: usize, to: usize) -> Word {
        debug_assert!(from <= to && to <= self.len());
        let len = to - from;
        let shifted = self.bits >> (self.len() - to);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Word {
            len: len as u8,
            bits: shifted & mask,
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0, n)
    }

    pub fn suffix_from(&self, n: usize) -> Word {
        self.slice(n, self.len())
    }

    /// Positions of the letters `z`, left to right.
    pub fn z_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.letter(i) == Letter::Z).collect()
    }

    /// The exponents `[e_0, ..., e_m]` with `self = x^{e_0} z ... z x^{e_m}`.
    pub fn x_blocks(&self) -> Vec<usize> {
        let mut out = vec![0];
        for l in self.letters() {
            match l {
                Letter::X => *out.last_mut().unwrap() += 1,
                Letter::Z => out.push(0),
            }
        }
        out
    }

    /// Sub-word picked out by the bit mask over positions (bit `i` set picks
    /// position `i`, counted from the left).
    pub(crate) fn select(&self, mask: u64) -> Word {
        let mut w = Word::EMPTY;
        for i in 0..self.len() {
            if (mask >> i) & 1 == 1 {
                w = w.push(self.letter(i));
            }
        }
        w
    }

    pub fn as_string(&self) -> String {
        self.letters().map(Letter::as_char).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len, self.depth(), self.bits).cmp(&(other.len, other.depth(), other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Basis for Word {
    fn bidegree(&self) -> Bidegree {
        (self.depth(), self.weight())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.as_string())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a string over `{x, z}`; `""` and `"1"` are the empty word.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "1" {
            return Ok(Word::EMPTY);
        }
        if s.len() > MAX_WORD_LEN {
            return Err(Error::Parse(format!("word longer than {MAX_WORD_LEN} letters")));
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'z' => Ok(Letter::Z),
                _ => Err(Error::Parse(format!("invalid letter {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from_letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.as_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All words of depth `m` and weight `k`, in increasing order.
pub fn words_of_bidegree(m: usize, k: usize) -> Vec<Word> {
    if m > k {
        return Vec::new();
    }
    assert!(k <= MAX_WORD_LEN, "word too long");
    let mut out = Vec::new();
    // Enumerate bit patterns with `m` ones among `k` bits in increasing order.
    if m == 0 {
        return vec![Word::x_power(k)];
    }
    let mut bits: u64 = (1u64 << m) - 1;
    let limit: u64 = if k == 64 { u64::MAX } else { 1u64 << k };
    while bits < limit {
        out.push(Word { len: k as u8, bits });
        // Gosper's hack: next integer with the same popcount.
        let c = bits & bits.wrapping_neg();
        let r = bits + c;
        bits = (((r ^ bits) >> 2) / c) | r;
    }
    out
}

pub fn word_basis(m: usize, k: usize) -> BlockBasis<Word> {
    BlockBasis::new(words_of_bidegree(m, k))
}

/// All words of weight exactly `k`.
pub fn words_of_weight(k: usize) -> Vec<Word> {
    (0..=k).flat_map(|m| words_of_bidegree(m, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn packing_round_trips() {
        for s in ["", "x", "z", "xz", "zx", "xxzzx", "zzzzzzzzzzzzzzzzzzzzzzzzzzzzzzx"] {
            assert_eq!(w(s).as_string(), s);
        }
        assert_eq!(w("xzzx").depth(), 2);
        assert_eq!(w("xzzx").weight(), 4);
        assert_eq!(w("xzzx").letter(0), Letter::X);
        assert_eq!(w("xzzx").letter(1), Letter::Z);
    }

    #[test]
    fn slicing_and_blocks() {
        let u = w("xxzxzzx");
        assert_eq!(u.slice(2, 5), w("zxz"));
        assert_eq!(u.prefix(0), Word::EMPTY);
        assert_eq!(u.suffix_from(7), Word::EMPTY);
        assert_eq!(u.x_blocks(), vec![2, 1, 0, 1]);
        assert_eq!(Word::from_x_blocks(&[2, 1, 0, 1]), u);
        assert_eq!(w("xz").concat(&w("zx")), w("xzzx"));
    }

    #[test]
    fn ordering_is_graded_lex() {
        let mut v = [w("zx"), w("x"), w("xz"), w("xx"), w("z"), w("")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.as_string()).collect();
        assert_eq!(s, ["", "x", "z", "xx", "xz", "zx"]);
    }

    #[test]
    fn bidegree_enumeration() {
        let ws = words_of_bidegree(2, 4);
        assert_eq!(ws.len(), 6);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
        assert!(ws.iter().all(|u| u.depth() == 2 && u.weight() == 4));
        assert_eq!(words_of_bidegree(0, 3), vec![w("xxx")]);
        assert_eq!(words_of_bidegree(3, 3), vec![w("zzz")]);
        assert!(words_of_bidegree(4, 3).is_empty());
        assert_eq!(words_of_weight(5).len(), 32);
    }

    #[test]
    fn rejects_bad_letters() {
        assert!("xy".parse::<Word>().is_err());
    }
}
