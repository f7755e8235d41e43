//! Finite groups given by a presentation `<S | T>` together with a
//! tabulated multiplication, plus the free-group word layer used to evaluate
//! the map from free words onto the group.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::{self, WordExpr};

/// Largest group order accepted.
pub const MAX_GROUP_ORDER: usize = 4096;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverted: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverted: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverted: true }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverted: !self.inverted }
    }
}

/// An element of the free group on the generators, as an unreduced
/// sequence of letters. The empty sequence is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    /// `g^k` for a single generator; negative `k` gives inverse letters.
    pub fn power(generator: usize, k: i64) -> Self {
        let letter = if k < 0 { Letter::neg(generator) } else { Letter::pos(generator) };
        FreeWord(vec![letter; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Free reduction: cancels adjacent `s s^-1` pairs until none remain.
    pub fn reduce(&self) -> FreeWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        FreeWord(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Renders with generator names, collapsing runs into powers:
    /// `x^3*y*x^-1`. The identity renders as `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a FreeWord,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = &self.word.0;
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let name = &self.names[letters[i].generator];
            let run = (j - i) as i64;
            let exp = if letters[i].inverted { -run } else { run };
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Generators and relators `<S | T>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            let valid = g.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && g.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidPresentation(format!("bad generator name {g:?}")));
            }
            if generators[..i].contains(g) {
                return Err(Error::InvalidPresentation(format!("duplicate generator {g}")));
            }
        }
        for r in &relators {
            if r.is_empty() {
                return Err(Error::InvalidPresentation("empty relator".into()));
            }
            if r.0.iter().any(|l| l.generator >= generators.len()) {
                return Err(Error::InvalidPresentation("relator uses unknown generator".into()));
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a word such as `x^3*y`, `(x*y)^2` or `x^-1` over these generators.
    pub fn parse_word(&self, s: &str) -> Result<FreeWord> {
        self.resolve(&text::parse_word(s)?)
    }

    pub(crate) fn resolve(&self, expr: &WordExpr) -> Result<FreeWord> {
        Ok(match expr {
            WordExpr::Identity => FreeWord::identity(),
            WordExpr::Gen(name) => {
                let g = self
                    .generator_index(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                FreeWord(vec![Letter::pos(g)])
            }
            WordExpr::Product(parts) => {
                let mut letters = Vec::new();
                for p in parts {
                    letters.extend(self.resolve(p)?.0);
                }
                FreeWord(letters)
            }
            WordExpr::Power(base, e) => {
                let w = self.resolve(base)?;
                let unit = if *e < 0 { w.inverse() } else { w };
                let mut letters = Vec::new();
                for _ in 0..e.unsigned_abs() {
                    letters.extend_from_slice(&unit.0);
                }
                FreeWord(letters)
            }
        })
    }

    pub fn format_word(&self, w: &FreeWord) -> String {
        w.display(&self.generators).to_string()
    }
}

/// Which closed-form construction produced a group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(usize),
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<usize>),
    /// Dihedral group of order `2n`, storing `n`.
    Dihedral(usize),
    Custom,
}

impl Family {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            Family::Cyclic(n) => FiniteGroup::cyclic(*n),
            Family::Abelian(orders) => FiniteGroup::abelian(orders),
            Family::Dihedral(n) => FiniteGroup::dihedral(*n),
            Family::Custom => Err(Error::UnsupportedGroup(
                "custom groups are built from Cayley tables".into(),
            )),
        }
    }
}

/// Descriptor syntax: `C:n`, `A:n1,n2,...`, `D:2n` (the dihedral group of order 2n).
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(format!("bad group descriptor {s:?}"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (kind.trim(), nums.as_slice()) {
            ("C", [n]) => Ok(Family::Cyclic(*n)),
            ("A", orders) if !orders.is_empty() => Ok(Family::Abelian(orders.to_vec())),
            ("D", [order]) => {
                if order % 2 != 0 {
                    return Err(Error::InvalidOrder(format!("dihedral order {order} is odd")));
                }
                Ok(Family::Dihedral(order / 2))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C:{n}"),
            Family::Abelian(orders) => {
                let parts: Vec<String> = orders.iter().map(|n| n.to_string()).collect();
                write!(f, "A:{}", parts.join(","))
            }
            Family::Dihedral(n) => write!(f, "D:{}", 2 * n),
            Family::Custom => f.write_str("custom"),
        }
    }
}

/// A finite group with a fixed enumeration of its elements.
///
/// Element indices are the column order of every matrix built downstream.
/// Each element carries a canonical word in the generators.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    presentation: Presentation,
    family: Family,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    identity: usize,
    generator_elements: Vec<usize>,
    words: Vec<FreeWord>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.family, self.order)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_GROUP_ORDER {
        Err(Error::GroupTooLarge(n))
    } else {
        Ok(())
    }
}

impl FiniteGroup {
    /// Assembles a group from parts built by a closed form; no validation.
    fn assemble(
        presentation: Presentation,
        family: Family,
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        generator_elements: Vec<usize>,
        words: Vec<FreeWord>,
    ) -> Self {
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = mul(a, b) as u32;
            }
        }
        let identity = 0;
        let inverse = (0..order)
            .map(|a| (0..order).find(|&b| table[a * order + b] as usize == identity).unwrap())
            .collect();
        let names = words.iter().map(|w| presentation.format_word(w)).collect();
        FiniteGroup {
            presentation,
            family,
            order,
            table,
            inverse,
            identity,
            generator_elements,
            words,
            names,
        }
    }

    /// `C_n = <x | x^n>`, elements `1, x, ..., x^(n-1)`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder("cyclic order must be at least 1".into()));
        }
        check_order(n)?;
        let pres = Presentation::new(vec!["x".into()], vec![FreeWord::power(0, n as i64)])?;
        let words = (0..n).map(|k| FreeWord::power(0, k as i64)).collect();
        Ok(Self::assemble(
            pres,
            Family::Cyclic(n),
            n,
            |a, b| (a + b) % n,
            vec![1 % n],
            words,
        ))
    }

    /// `C_{n_1} x ... x C_{n_k}` with generators `x1..xk` (just `x` when k = 1),
    /// relators `x_i^{n_i}` and the commutators `[x_i, x_j] = x_i^-1 x_j^-1 x_i x_j`
    /// for all ordered pairs `i != j`. Elements are exponent tuples in
    /// lexicographic order, the first coordinate most significant.
    pub fn abelian(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::InvalidOrder("abelian factor orders must be at least 1".into()));
        }
        let order = orders.iter().fold(1usize, |acc, &n| acc.saturating_mul(n));
        check_order(order)?;
        let k = orders.len();
        let names: Vec<String> = if k == 1 {
            vec!["x".into()]
        } else {
            (1..=k).map(|i| format!("x{i}")).collect()
        };
        let mut relators: Vec<FreeWord> =
            orders.iter().enumerate().map(|(i, &n)| FreeWord::power(i, n as i64)).collect();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    relators.push(FreeWord(vec![
                        Letter::neg(i),
                        Letter::neg(j),
                        Letter::pos(i),
                        Letter::pos(j),
                    ]));
                }
            }
        }
        let pres = Presentation::new(names, relators)?;

        // place values: index = sum e_i * stride_i
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        let digits = |mut idx: usize| -> Vec<usize> {
            let mut e = vec![0; k];
            for i in 0..k {
                e[i] = idx / strides[i];
                idx %= strides[i];
            }
            e
        };
        let words = (0..order)
            .map(|idx| {
                let mut letters = Vec::new();
                for (i, e) in digits(idx).into_iter().enumerate() {
                    letters.extend(FreeWord::power(i, e as i64).0);
                }
                FreeWord(letters)
            })
            .collect();
        let generators = (0..k).map(|i| (1 % orders[i]) * strides[i]).collect();
        let mul = |a: usize, b: usize| {
            let (ea, eb) = (digits(a), digits(b));
            (0..k).map(|i| ((ea[i] + eb[i]) % orders[i]) * strides[i]).sum()
        };
        Ok(Self::assemble(pres, Family::Abelian(orders.to_vec()), order, mul, generators, words))
    }

    /// `D_{2n} = <x, y | x^n, y^2, (xy)^2>` for `n >= 3`, elements
    /// `1, x, ..., x^(n-1), y, xy, ..., x^(n-1)y`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidOrder(format!("dihedral group needs n >= 3, got {n}")));
        }
        check_order(2 * n)?;
        let xy = FreeWord(vec![Letter::pos(0), Letter::pos(1)]);
        let pres = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![FreeWord::power(0, n as i64), FreeWord::power(1, 2), xy.concat(&xy)],
        )?;
        let words = (0..2 * n)
            .map(|idx| {
                let mut w = FreeWord::power(0, (idx % n) as i64);
                if idx >= n {
                    w.0.push(Letter::pos(1));
                }
                w
            })
            .collect();
        // x^a y^e * x^b y^f = x^(a + (-1)^e b) y^(e+f)
        let mul = |a: usize, b: usize| {
            let (ra, ea) = (a % n, a / n);
            let (rb, eb) = (b % n, b / n);
            let r = if ea == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
            r + n * ((ea + eb) % 2)
        };
        Ok(Self::assemble(pres, Family::Dihedral(n), 2 * n, mul, vec![1, n], words))
    }

    /// Ingests a user-supplied Cayley table. `generator_elements[i]` is the
    /// element denoted by the i-th generator. Canonical words are found by
    /// breadth-first search from the identity over `S ∪ S^-1` unless
    /// supplied in `words` (one per element).
    pub fn from_cayley(
        table: Vec<Vec<usize>>,
        presentation: Presentation,
        generator_elements: Vec<usize>,
        words: Option<Vec<FreeWord>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        check_order(n)?;
        if table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(Error::NotAGroup("table is not N x N over [0, N)".into()));
        }
        if generator_elements.len() != presentation.generators().len() {
            return Err(Error::InvalidPresentation(
                "one element index is needed per generator".into(),
            ));
        }
        if generator_elements.iter().any(|&g| g >= n) {
            return Err(Error::InvalidPresentation("generator element out of range".into()));
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        let at = |a: usize, b: usize| flat[a * n + b] as usize;

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut seen[at(a, b)], true) {
                    return Err(Error::NotAGroup(format!("row {a} repeats an entry")));
                }
            }
            let mut seen = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut seen[at(b, a)], true) {
                    return Err(Error::NotAGroup(format!("column {a} repeats an entry")));
                }
            }
            inverse[a] = (0..n).find(|&b| at(a, b) == identity).unwrap();
        }

        // Words by BFS also prove that the generators generate.
        let mut bfs: Vec<Option<FreeWord>> = vec![None; n];
        bfs[identity] = Some(FreeWord::identity());
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for (s, &sg) in generator_elements.iter().enumerate() {
                for (letter, step) in [(Letter::pos(s), sg), (Letter::neg(s), inverse[sg])] {
                    let h = at(g, step);
                    if bfs[h].is_none() {
                        let mut w = bfs[g].clone().unwrap();
                        w.0.push(letter);
                        bfs[h] = Some(w);
                        queue.push_back(h);
                    }
                }
            }
        }
        if bfs.iter().any(Option::is_none) {
            return Err(Error::NotAGroup("generators do not generate the table".into()));
        }
        // Light's test: with a generating set, checking (a b) s = a (b s) for
        // generators s suffices for associativity of a loop with inverses.
        for &s in &generator_elements {
            for a in 0..n {
                for b in 0..n {
                    if at(at(a, b), s) != at(a, at(b, s)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {s})"
                        )));
                    }
                }
            }
        }

        let words: Vec<FreeWord> = match words {
            None => bfs.into_iter().map(Option::unwrap).collect(),
            Some(w) if w.len() != n => {
                return Err(Error::InvalidPresentation(format!(
                    "{} canonical words for {n} elements",
                    w.len()
                )))
            }
            Some(w) => w,
        };
        let names = words.iter().map(|w| presentation.format_word(w)).collect();
        let group = FiniteGroup {
            presentation,
            family: Family::Custom,
            order: n,
            table: flat,
            inverse,
            identity,
            generator_elements,
            words,
            names,
        };
        group.check_words_and_relators()?;
        Ok(group)
    }

    fn check_words_and_relators(&self) -> Result<()> {
        for (g, w) in self.words.iter().enumerate() {
            if w.0.iter().any(|l| l.generator >= self.generator_elements.len()) {
                return Err(Error::InvalidPresentation("word uses unknown generator".into()));
            }
            if self.eval_word(w) != g {
                return Err(Error::WordMismatch {
                    element: g,
                    word: self.presentation.format_word(w),
                });
            }
        }
        for t in self.presentation.relators() {
            if self.eval_word(t) != self.identity {
                return Err(Error::RelatorNotSatisfied(self.presentation.format_word(t)));
            }
        }
        Ok(())
    }

    /// Verifies every structural invariant; used on freshly built family groups in tests.
    pub fn validate(&self) -> Result<()> {
        let table: Vec<Vec<usize>> = (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect();
        let rebuilt = Self::from_cayley(
            table,
            self.presentation.clone(),
            self.generator_elements.clone(),
            Some(self.words.clone()),
        )?;
        if rebuilt.identity != self.identity || rebuilt.inverse != self.inverse {
            return Err(Error::NotAGroup("identity or inverse table inconsistent".into()));
        }
        Ok(())
    }

    /// Parses the text format: first line N, then N rows of N indices, then
    /// a presentation block:
    ///
    /// ```text
    /// generators x=1 y=4
    /// relator x^4
    /// relator y^2
    /// relator (x*y)^2
    /// word 3 x^3          (optional, overrides the BFS word of element 3)
    /// ```
    pub fn from_cayley_text(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::parse("empty Cayley file"))?
            .parse()
            .map_err(|_| Error::parse("first line must be the group order"))?;
        check_order(n)?;
        let mut table = Vec::with_capacity(n);
        for r in 0..n {
            let line = lines.next().ok_or_else(|| Error::parse(format!("missing table row {r}")))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::parse(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        let mut gen_names = Vec::new();
        let mut gen_elements = Vec::new();
        let mut relator_text = Vec::new();
        let mut word_text = Vec::new();
        for line in lines {
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "generators" => {
                    for item in rest.split_whitespace() {
                        let (name, idx) = item
                            .split_once('=')
                            .ok_or_else(|| Error::parse(format!("bad generator {item:?}")))?;
                        gen_names.push(name.to_string());
                        gen_elements.push(
                            idx.parse::<usize>()
                                .map_err(|_| Error::parse(format!("bad index in {item:?}")))?,
                        );
                    }
                }
                "relator" => relator_text.push(rest.trim().to_string()),
                "word" => {
                    let (idx, w) = rest
                        .trim()
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| Error::parse(format!("bad word line {line:?}")))?;
                    let idx = idx
                        .parse::<usize>()
                        .map_err(|_| Error::parse(format!("bad word index {idx:?}")))?;
                    word_text.push((idx, w.trim().to_string()));
                }
                _ => return Err(Error::parse(format!("unknown directive {key:?}"))),
            }
        }
        if gen_names.is_empty() {
            return Err(Error::parse("missing generators line"));
        }
        let bare = Presentation::new(gen_names.clone(), Vec::new())?;
        let relators = relator_text
            .iter()
            .map(|r| bare.parse_word(r))
            .collect::<Result<Vec<_>>>()?;
        let presentation = Presentation::new(gen_names, relators)?;
        let mut overrides = Vec::new();
        for (idx, w) in &word_text {
            if *idx >= n {
                return Err(Error::parse(format!("word index {idx} out of range")));
            }
            overrides.push((*idx, presentation.parse_word(w)?));
        }
        let mut group = Self::from_cayley(table, presentation, gen_elements, None)?;
        if !overrides.is_empty() {
            for (idx, w) in overrides {
                group.words[idx] = w;
            }
            group.names =
                group.words.iter().map(|w| group.presentation.format_word(w)).collect();
            group.check_words_and_relators()?;
        }
        Ok(group)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `φ(s)` for the i-th generator.
    pub fn generator(&self, i: usize) -> usize {
        self.generator_elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generator_elements
    }

    pub fn canonical_word(&self, g: usize) -> &FreeWord {
        &self.words[g]
    }

    /// Display name of an element, e.g. `x^3*y`; the identity is `1`.
    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn element_by_name(&self, name: &str) -> Result<usize> {
        Ok(self.eval_word(&self.presentation.parse_word(name)?))
    }

    /// `φ(w)`: evaluates a free word in the group.
    pub fn eval_word(&self, w: &FreeWord) -> usize {
        w.0.iter().fold(self.identity, |acc, &l| self.mul(acc, self.eval_letter(l)))
    }

    #[inline]
    pub fn eval_letter(&self, l: Letter) -> usize {
        let g = self.generator_elements[l.generator];
        if l.inverted {
            self.inverse[g]
        } else {
            g
        }
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse[g] } else { g };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut h = g;
        let mut k = 1;
        while h != self.identity {
            h = self.mul(h, g);
            k += 1;
        }
        k
    }

    /// `h^-1 g h`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inverse[h], g), h)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, g: usize) -> bool {
        (0..self.order).all(|h| self.mul(g, h) == self.mul(h, g))
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..self.order {
            if assigned[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|h| self.conjugate(g, h)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                assigned[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Smallest subgroup containing `gens`, sorted.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !inside[b] {
                    inside[b] = true;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        if elements.is_empty() || elements.iter().any(|&e| e >= self.order) {
            return false;
        }
        let mut inside = vec![false; self.order];
        for &e in elements {
            inside[e] = true;
        }
        inside[self.identity]
            && elements.iter().all(|&a| {
                inside[self.inverse[a]] && elements.iter().all(|&b| inside[self.mul(a, b)])
            })
    }
}
