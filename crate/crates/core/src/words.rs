//! Reduced words in the free product `G ∗ ⟨b⟩` of a group with an infinite
//! cyclic group.
//!
//! A reduced word of length `s` is `(u_0, u_1, …, u_2s)` with even positions
//! in `G`, odd positions in `{b, b^-1}`, and no interior `u_2i = 1` flanked by
//! mutually inverse `b`-letters. Words are normalized by letting the letters
//! act on the word `(1)`, which is the classical van der Waerden action.
//!
//! Twisted automorphisms `ψ` extend a base automorphism `φ` by `ψ(b) = pb`;
//! they preserve length, and [`FreeProduct::eliminate_b`] reduces
//! `ψ(v)v^-1 = wqw^-1` to four equations in `G`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{ElementId, FiniteGroup};

/// The interface the word machinery needs from the base group: element ids,
/// the identity, multiplication and inverses.
pub trait BaseGroup {
    fn identity(&self) -> ElementId;
    fn mul(&self, x: ElementId, y: ElementId) -> ElementId;
    fn inv(&self, x: ElementId) -> ElementId;
    fn contains(&self, x: ElementId) -> bool;
    /// Distinguishes base groups so words from different groups never mix.
    fn fingerprint(&self) -> u64;
}

/// Base groups whose elements can be listed, for the exhaustive searches.
pub trait FiniteBase: BaseGroup {
    fn order(&self) -> usize;
}

impl BaseGroup for FiniteGroup {
    fn identity(&self) -> ElementId {
        FiniteGroup::identity(self)
    }

    fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        FiniteGroup::mul(self, x, y)
    }

    fn inv(&self, x: ElementId) -> ElementId {
        FiniteGroup::inv(self, x)
    }

    fn contains(&self, x: ElementId) -> bool {
        FiniteGroup::contains(self, x)
    }

    fn fingerprint(&self) -> u64 {
        FiniteGroup::fingerprint(self)
    }
}

impl FiniteBase for FiniteGroup {
    fn order(&self) -> usize {
        FiniteGroup::order(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BExp {
    Plus,
    Minus,
}

impl BExp {
    pub fn inverse(self) -> Self {
        match self {
            BExp::Plus => BExp::Minus,
            BExp::Minus => BExp::Plus,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            BExp::Plus => 1,
            BExp::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    Base(ElementId),
    B(BExp),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Base(x) => write!(f, "g:{x}"),
            Letter::B(BExp::Plus) => f.write_str("b"),
            Letter::B(BExp::Minus) => f.write_str("b-"),
        }
    }
}

/// Parses whitespace-separated `g:<id>`, `b` (or `b+`) and `b-` tokens.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace()
        .map(|tok| match tok {
            "b" | "b+" => Ok(Letter::B(BExp::Plus)),
            "b-" => Ok(Letter::B(BExp::Minus)),
            _ => tok
                .strip_prefix("g:")
                .and_then(|id| id.parse::<ElementId>().ok())
                .map(Letter::Base)
                .ok_or_else(|| Error::Parse(format!("bad word token {tok:?}"))),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    base: u64,
    letters: Vec<Letter>,
}

impl ReducedWord {
    /// The alternating sequence `(u_0, …, u_2s)`.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The number `s` of `b`-letters.
    pub fn length(&self) -> usize {
        self.letters.len() / 2
    }

    /// `u_2i`.
    pub fn base_letter(&self, i: usize) -> ElementId {
        match self.letters[2 * i] {
            Letter::Base(x) => x,
            Letter::B(_) => unreachable!("even positions hold base letters"),
        }
    }

    /// Exponent of `u_2i+1`.
    pub fn b_letter(&self, i: usize) -> BExp {
        match self.letters[2 * i + 1] {
            Letter::B(e) => e,
            Letter::Base(_) => unreachable!("odd positions hold b-letters"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters == [Letter::Base(0)]
    }

    pub fn base_fingerprint(&self) -> u64 {
        self.base
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&toks.join(" "))
    }
}

/// A base automorphism `φ` (as an id map) with `p`, inducing `ψ` on
/// `G ∗ ⟨b⟩` by `ψ|_G = φ`, `ψ(b) = pb`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedAutomorphism {
    base: u64,
    phi: Vec<ElementId>,
    p: ElementId,
}

impl TwistedAutomorphism {
    pub fn phi(&self, x: ElementId) -> ElementId {
        self.phi[x]
    }

    pub fn phi_map(&self) -> &[ElementId] {
        &self.phi
    }

    pub fn p(&self) -> ElementId {
        self.p
    }
}

/// One of the four equations with a solution `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Elimination {
    pub case: u8,
    pub x: ElementId,
    pub y: ElementId,
}

/// Word operations over a fixed base group.
#[derive(Debug, Clone, Copy)]
pub struct FreeProduct<'g, G: BaseGroup> {
    base: &'g G,
}

impl<'g, G: BaseGroup> FreeProduct<'g, G> {
    pub fn new(base: &'g G) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &'g G {
        self.base
    }

    fn word(&self, letters: Vec<Letter>) -> ReducedWord {
        ReducedWord {
            base: self.base.fingerprint(),
            letters,
        }
    }

    fn check_word(&self, w: &ReducedWord) -> Result<()> {
        if w.base != self.base.fingerprint() {
            return Err(Error::MixedBase);
        }
        Ok(())
    }

    fn check_twist(&self, t: &TwistedAutomorphism) -> Result<()> {
        if t.base != self.base.fingerprint() {
            return Err(Error::MixedBase);
        }
        Ok(())
    }

    pub fn identity_word(&self) -> ReducedWord {
        self.word(vec![Letter::Base(self.base.identity())])
    }

    pub fn base_word(&self, x: ElementId) -> Result<ReducedWord> {
        self.check_letter(&Letter::Base(x))?;
        Ok(self.word(vec![Letter::Base(x)]))
    }

    fn check_letter(&self, l: &Letter) -> Result<()> {
        match l {
            Letter::Base(x) if !self.base.contains(*x) => Err(Error::UnknownElement(*x)),
            _ => Ok(()),
        }
    }

    /// Whether `letters` already has the reduced-word shape.
    pub fn is_reduced(&self, letters: &[Letter]) -> bool {
        if letters.len().is_multiple_of(2) {
            return false;
        }
        let shape = letters.iter().enumerate().all(|(i, l)| match l {
            Letter::Base(x) => i % 2 == 0 && self.base.contains(*x),
            Letter::B(_) => i % 2 == 1,
        });
        shape
            && (1..letters.len() / 2).all(|i| {
                !(letters[2 * i] == Letter::Base(self.base.identity())
                    && matches!((letters[2 * i - 1], letters[2 * i + 1]),
                        (Letter::B(e1), Letter::B(e2)) if e1 == e2.inverse()))
            })
    }

    /// Accepts a sequence that is already reduced, without rewriting it.
    pub fn reduced_from_letters(&self, letters: Vec<Letter>) -> Result<ReducedWord> {
        for l in &letters {
            self.check_letter(l)?;
        }
        if !self.is_reduced(&letters) {
            return Err(Error::Parse("letters do not form a reduced word".into()));
        }
        Ok(self.word(letters))
    }

    /// The unique reduced word of the product of `letters`, computed by acting
    /// with each letter, rightmost first, on the word `(1)`.
    pub fn normalize(&self, letters: &[Letter]) -> Result<ReducedWord> {
        for l in letters {
            self.check_letter(l)?;
        }
        let one = self.base.identity();
        let mut y: VecDeque<Letter> = VecDeque::from([Letter::Base(one)]);
        for letter in letters.iter().rev() {
            match *letter {
                Letter::Base(v) => {
                    if let Some(Letter::Base(u0)) = y.front_mut() {
                        *u0 = self.base.mul(v, *u0);
                    }
                }
                Letter::B(eps) => {
                    let cancels = y.len() >= 3
                        && y[0] == Letter::Base(one)
                        && y[1] == Letter::B(eps.inverse());
                    if cancels {
                        y.pop_front();
                        y.pop_front();
                    } else {
                        y.push_front(Letter::B(eps));
                        y.push_front(Letter::Base(one));
                    }
                }
            }
        }
        Ok(self.word(y.into()))
    }

    /// `u^-1`: reverse the word and invert every letter.
    pub fn invert(&self, u: &ReducedWord) -> Result<ReducedWord> {
        self.check_word(u)?;
        let letters = u
            .letters
            .iter()
            .rev()
            .map(|l| match *l {
                Letter::Base(x) => Letter::Base(self.base.inv(x)),
                Letter::B(e) => Letter::B(e.inverse()),
            })
            .collect();
        Ok(self.word(letters))
    }

    /// The reduced word of `uv` and the number `n` of cancelled `b`-pairs, so
    /// that `len(uv) = len(u) + len(v) - 2n`.
    pub fn multiply(&self, u: &ReducedWord, v: &ReducedWord) -> Result<(ReducedWord, usize)> {
        self.check_word(u)?;
        self.check_word(v)?;
        let one = self.base.identity();
        let mut left: Vec<Letter> = u.letters.clone();
        let right = &v.letters;
        let mut ri = 0usize;
        let mut cancelled = 0usize;
        let take_base = |l: Option<Letter>| match l {
            Some(Letter::Base(x)) => x,
            _ => unreachable!("reduced words end and start with base letters"),
        };
        let mut middle = self
            .base
            .mul(take_base(left.pop()), take_base(right.first().copied()));
        ri += 1;
        // Only the junction can break reducedness: the middle letter must be 1
        // and the flanking b-letters mutually inverse.
        while middle == one && !left.is_empty() && ri < right.len() {
            match (left.last(), right.get(ri)) {
                (Some(Letter::B(e1)), Some(Letter::B(e2))) if *e1 == e2.inverse() => {
                    left.pop();
                    let lb = take_base(left.pop());
                    let rb = take_base(right.get(ri + 1).copied());
                    ri += 2;
                    middle = self.base.mul(lb, rb);
                    cancelled += 1;
                }
                _ => break,
            }
        }
        left.push(Letter::Base(middle));
        left.extend_from_slice(&right[ri..]);
        if !self.is_reduced(&left) {
            return Err(Error::InternalInconsistency(format!(
                "product is not reduced away from the junction: {}",
                self.word(left)
            )));
        }
        let product = self.word(left);
        debug_assert_eq!(product.length() + 2 * cancelled, u.length() + v.length());
        Ok((product, cancelled))
    }

    pub fn product(&self, words: &[&ReducedWord]) -> Result<ReducedWord> {
        let mut acc = self.identity_word();
        for w in words {
            acc = self.multiply(&acc, w)?.0;
        }
        Ok(acc)
    }

    /// `ψ(v)` from the explicit letter formulas: with `p_1 = p`, `p_-1 = 1`,
    /// `u_0 = φ(v_0) p_ε1`, `u_2i = p_(-ε_2i-1)^-1 φ(v_2i) p_ε_2i+1`,
    /// `u_2s = p_(-ε_2s-1)^-1 φ(v_2s)`, and `b`-letters unchanged.
    pub fn apply_twisted(&self, t: &TwistedAutomorphism, v: &ReducedWord) -> Result<ReducedWord> {
        self.check_twist(t)?;
        self.check_word(v)?;
        let one = self.base.identity();
        let p_eps = |e: BExp| match e {
            BExp::Plus => t.p,
            BExp::Minus => one,
        };
        let s = v.length();
        let mut letters = Vec::with_capacity(v.letters.len());
        for i in 0..=s {
            let mut x = t.phi[v.base_letter(i)];
            if i > 0 {
                let before = v.b_letter(i - 1);
                x = self.base.mul(self.base.inv(p_eps(before.inverse())), x);
            }
            if i < s {
                x = self.base.mul(x, p_eps(v.b_letter(i)));
            }
            letters.push(Letter::Base(x));
            if i < s {
                letters.push(Letter::B(v.b_letter(i)));
            }
        }
        Ok(self.word(letters))
    }

    /// `ψ(v)` by substituting `x ↦ φ(x)`, `b ↦ pb`, `b^-1 ↦ b^-1 p^-1` and
    /// normalizing. Independent of the letter formulas in [`Self::apply_twisted`].
    pub fn apply_twisted_by_substitution(
        &self,
        t: &TwistedAutomorphism,
        v: &ReducedWord,
    ) -> Result<ReducedWord> {
        self.check_twist(t)?;
        self.check_word(v)?;
        let mut letters = Vec::new();
        for l in &v.letters {
            match *l {
                Letter::Base(x) => letters.push(Letter::Base(t.phi[x])),
                Letter::B(BExp::Plus) => {
                    letters.push(Letter::Base(t.p));
                    letters.push(Letter::B(BExp::Plus));
                }
                Letter::B(BExp::Minus) => {
                    letters.push(Letter::B(BExp::Minus));
                    letters.push(Letter::Base(self.base.inv(t.p)));
                }
            }
        }
        self.normalize(&letters)
    }

    /// `(1, b^±1, 1)`
    pub fn b_word(&self, e: BExp) -> ReducedWord {
        let one = Letter::Base(self.base.identity());
        self.word(vec![one, Letter::B(e), one])
    }

    /// The pair `(v, w)` with `ψ(v)v^-1 = wqw^-1` attached to a solution of
    /// equation `case`: `v = x, w = y`; `v = xb, w = y`; `v = b^-1x, w = b^-1y`;
    /// `v = b^-1xb, w = b^-1y`.
    pub fn construct_vw(
        &self,
        case: u8,
        x: ElementId,
        y: ElementId,
    ) -> Result<(ReducedWord, ReducedWord)> {
        let (b, bi) = (Letter::B(BExp::Plus), Letter::B(BExp::Minus));
        let (gx, gy) = (Letter::Base(x), Letter::Base(y));
        let (v, w) = match case {
            1 => (vec![gx], vec![gy]),
            2 => (vec![gx, b], vec![gy]),
            3 => (vec![bi, gx], vec![bi, gy]),
            4 => (vec![bi, gx, b], vec![bi, gy]),
            _ => return Err(Error::InvalidCase(case)),
        };
        Ok((self.normalize(&v)?, self.normalize(&w)?))
    }

    /// Whether `ψ(v)v^-1 = wqw^-1`.
    pub fn satisfies_twisted_equation(
        &self,
        t: &TwistedAutomorphism,
        q: ElementId,
        v: &ReducedWord,
        w: &ReducedWord,
    ) -> Result<bool> {
        let lhs = self
            .multiply(&self.apply_twisted(t, v)?, &self.invert(v)?)?
            .0;
        let qw = self.base_word(q)?;
        let rhs = self.product(&[w, &qw, &self.invert(w)?])?;
        Ok(lhs == rhs)
    }
}

impl<'g, G: FiniteBase> FreeProduct<'g, G> {
    /// Validates that `phi` is an automorphism of the base group.
    pub fn twisted(&self, phi: Vec<ElementId>, p: ElementId) -> Result<TwistedAutomorphism> {
        let n = self.base.order();
        if phi.len() != n {
            return Err(Error::NotAutomorphism(format!(
                "map has {} entries, group has {n} elements",
                phi.len()
            )));
        }
        if !self.base.contains(p) {
            return Err(Error::InvalidLetter { id: p, order: n });
        }
        let mut seen = vec![false; n];
        for &y in &phi {
            if y >= n || seen[y] {
                return Err(Error::NotAutomorphism("map is not a bijection".into()));
            }
            seen[y] = true;
        }
        if phi[self.base.identity()] != self.base.identity() {
            return Err(Error::NotAutomorphism("identity is not fixed".into()));
        }
        for x in 0..n {
            for y in 0..n {
                if phi[self.base.mul(x, y)] != self.base.mul(phi[x], phi[y]) {
                    return Err(Error::NotAutomorphism(format!(
                        "phi({x}·{y}) != phi({x})·phi({y})"
                    )));
                }
            }
        }
        Ok(TwistedAutomorphism {
            base: self.base.fingerprint(),
            phi,
            p,
        })
    }

    /// Whether `ψ^d = id`, decided by applying `ψ` `d` times to `(1,b,1)` and
    /// to every one-letter word. Cross-checked against
    /// `φ^(d-1)(p) ⋯ φ(p) p = 1`.
    pub fn twisted_order_check(&self, t: &TwistedAutomorphism, d: u64) -> Result<bool> {
        self.check_twist(t)?;
        if d == 0 {
            return Err(Error::InvalidOrder {
                d,
                reason: "d must be at least 1".into(),
            });
        }
        let n = self.base.order();
        let phi_pow = |x: ElementId, e: u64| (0..e).fold(x, |acc, _| t.phi[acc]);
        if (0..n).any(|x| phi_pow(x, d) != x) {
            return Err(Error::InvalidOrder {
                d,
                reason: "phi^d is not the identity".into(),
            });
        }
        let psi_pow = |w: &ReducedWord| -> Result<ReducedWord> {
            let mut acc = w.clone();
            for _ in 0..d {
                acc = self.apply_twisted(t, &acc)?;
            }
            Ok(acc)
        };
        let bw = self.b_word(BExp::Plus);
        let mut fixed = psi_pow(&bw)? == bw;
        for x in 0..n {
            let xw = self.base_word(x)?;
            fixed &= psi_pow(&xw)? == xw;
        }
        let criterion = (0..d).fold(self.base.identity(), |acc, i| {
            self.base.mul(phi_pow(t.p, i), acc)
        });
        if fixed != (criterion == self.base.identity()) {
            return Err(Error::InternalInconsistency(
                "psi^d on words disagrees with the product criterion".into(),
            ));
        }
        Ok(fixed)
    }

    /// First `(case, x, y)` in lexicographic order solving one of
    /// `φ(x)x^-1 = yqy^-1`, `φ(x)px^-1 = yqy^-1`, `p^-1φ(x)x^-1 = yqy^-1`,
    /// `p^-1φ(x)px^-1 = yqy^-1`.
    pub fn eliminate_b(
        &self,
        t: &TwistedAutomorphism,
        q: ElementId,
    ) -> Result<Option<Elimination>> {
        self.check_twist(t)?;
        let n = self.base.order();
        if !self.base.contains(q) {
            return Err(Error::InvalidLetter { id: q, order: n });
        }
        let g = self.base;
        let mut first_y = vec![None; n];
        for y in (0..n).rev() {
            first_y[g.mul(g.mul(y, q), g.inv(y))] = Some(y);
        }
        let (p, p_inv) = (t.p, g.inv(t.p));
        for case in 1..=4u8 {
            for x in 0..n {
                let fx = t.phi[x];
                let core = match case {
                    1 => fx,
                    2 => g.mul(fx, p),
                    3 => g.mul(p_inv, fx),
                    _ => g.mul(g.mul(p_inv, fx), p),
                };
                if let Some(y) = first_y[g.mul(core, g.inv(x))] {
                    return Ok(Some(Elimination { case, x, y }));
                }
            }
        }
        Ok(None)
    }
}
