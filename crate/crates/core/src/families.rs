//! Named diagrams, their class counts and representative lists.
//!
//! Vertex numbering: a finite diagram on vertices `1..=n` stores vertex `k`
//! at index `k - 1`. Diagrams that also have a vertex `0` (the affine and
//! twisted ones, `X`, `Y`, `Z`) store it at the last index, so that the
//! remaining vertices form the underlying finite diagram as a bit prefix.
//! Boxed families store the free vertices first and the pinned ones after.
//! Flowers store the center at index 0. Every constructed diagram carries a
//! display order that prints labelings in the conventional numbering, vertex
//! `0` first where it exists and pinned vertices in their place.
//!
//! Representatives are written in that display order. In a fork `x/y` the
//! upper label belongs to the vertex with the larger number.

use std::fmt;
use std::str::FromStr;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::labeling::Labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    AffA,
    B,
    AffB,
    C,
    AffC,
    D,
    AffD,
    E6,
    E7,
    E8,
    AffE6,
    AffE7,
    AffE8,
    F4,
    AffF4,
    G2,
    AffG2,
    X,
    A2_2,
    Y,
    Z,
    E6_2,
    D4_3,
    Flower,
    AboxM,
    Abox1M,
    Bbox1,
    Dbox1,
}

impl Family {
    pub const ALL: [Family; 29] = [
        Family::A,
        Family::AffA,
        Family::B,
        Family::AffB,
        Family::C,
        Family::AffC,
        Family::D,
        Family::AffD,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::AffE6,
        Family::AffE7,
        Family::AffE8,
        Family::F4,
        Family::AffF4,
        Family::G2,
        Family::AffG2,
        Family::X,
        Family::A2_2,
        Family::Y,
        Family::Z,
        Family::E6_2,
        Family::D4_3,
        Family::Flower,
        Family::AboxM,
        Family::Abox1M,
        Family::Bbox1,
        Family::Dbox1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::AffA => "affA",
            Family::B => "B",
            Family::AffB => "affB",
            Family::C => "C",
            Family::AffC => "affC",
            Family::D => "D",
            Family::AffD => "affD",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::AffE6 => "affE6",
            Family::AffE7 => "affE7",
            Family::AffE8 => "affE8",
            Family::F4 => "F4",
            Family::AffF4 => "affF4",
            Family::G2 => "G2",
            Family::AffG2 => "affG2",
            Family::X => "X",
            Family::A2_2 => "A2_2",
            Family::Y => "Y",
            Family::Z => "Z",
            Family::E6_2 => "E6_2",
            Family::D4_3 => "D4_3",
            Family::Flower => "flower",
            Family::AboxM => "Abox_m",
            Family::Abox1M => "Abox_1m",
            Family::Bbox1 => "Bbox_1",
            Family::Dbox1 => "Dbox_1",
        }
    }

    /// Nominal rank of a fixed-size diagram.
    pub fn fixed_rank(self) -> Option<u32> {
        Some(match self {
            Family::E6 | Family::AffE6 | Family::E6_2 => 6,
            Family::E7 | Family::AffE7 => 7,
            Family::E8 | Family::AffE8 => 8,
            Family::F4 | Family::AffF4 | Family::D4_3 => 4,
            Family::G2 | Family::AffG2 | Family::A2_2 => 2,
            _ => return None,
        })
    }

    /// Smallest allowed parameter.
    pub fn min_param(self) -> u32 {
        if let Some(r) = self.fixed_rank() {
            return r;
        }
        match self {
            Family::A | Family::X | Family::Flower | Family::AboxM | Family::Abox1M => 1,
            Family::Bbox1 => 1,
            Family::AffA | Family::B | Family::Z => 2,
            Family::C | Family::AffC => 3,
            Family::AffB | Family::D | Family::Y | Family::Dbox1 => 4,
            Family::AffD => 5,
            _ => unreachable!("fixed-size families handled above"),
        }
    }

    /// Number of vertices (free and pinned) of the diagram with parameter `p`.
    pub fn vertex_count(self, p: u32) -> usize {
        let p = p as usize;
        match self {
            Family::A | Family::B | Family::C | Family::D => p,
            Family::AffA | Family::AffB | Family::AffC | Family::AffD => p + 1,
            Family::Y | Family::Z | Family::Flower => p + 1,
            Family::X => p + 2,
            Family::E6 | Family::G2 | Family::F4 | Family::A2_2 => p,
            Family::E7 | Family::E8 => p,
            Family::AffE6 | Family::AffE7 | Family::AffE8 | Family::AffF4 | Family::AffG2 => p + 1,
            Family::E6_2 => 5,
            Family::D4_3 => 3,
            Family::AboxM => p + 1,
            Family::Abox1M => p + 2,
            Family::Bbox1 => p + 2,
            Family::Dbox1 => p + 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    pub param: u32,
}

impl FamilySpec {
    pub fn new(family: Family, param: u32) -> Self {
        Self { family, param }
    }

    /// A fixed-size diagram at its nominal rank.
    pub fn fixed(family: Family) -> Self {
        let param = family
            .fixed_rank()
            .unwrap_or_else(|| panic!("{family} is not a fixed-size diagram"));
        Self { family, param }
    }

    pub fn validate(&self) -> Result<()> {
        let fam = self.family;
        let ok = match fam.fixed_rank() {
            Some(r) => self.param == r,
            None => self.param >= fam.min_param(),
        };
        let fits = ok && fam.vertex_count(self.param) <= Diagram::MAX_VERTICES;
        if fits {
            return Ok(());
        }
        let range = match fam.fixed_rank() {
            Some(r) => format!("fixed rank {r}"),
            None => format!("{} <= param, at most 64 vertices", fam.min_param()),
        };
        Err(Error::ParameterOutOfRange {
            family: fam.name().into(),
            param: self.param,
            range,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.param)
    }
}

fn parse_error(message: String) -> Error {
    Error::Parse { line: 0, message }
}

impl FromStr for Family {
    type Err = Error;

    /// Case-insensitive family name; `Abox`, `Bbox` and `Dbox` are accepted
    /// for `Abox_m`, `Bbox_1` and `Dbox_1`.
    fn from_str(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "abox" => Ok(Family::AboxM),
            "bbox" => Ok(Family::Bbox1),
            "dbox" => Ok(Family::Dbox1),
            _ => Family::ALL
                .into_iter()
                .find(|f| f.name().eq_ignore_ascii_case(name.trim()))
                .ok_or_else(|| parse_error(format!("unknown family {name:?}"))),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `NAME:PARAM`, with the parameter optional for fixed-size diagrams.
    /// `Abox:M:ends=1` and `Abox:M:ends=2` select the one- and two-sided
    /// boxed paths; `Bbox` and `Dbox` abbreviate `Bbox_1` and `Dbox_1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default();
        let param = parts.next();
        let extra = parts.next();
        if parts.next().is_some() {
            return Err(parse_error(format!("too many fields in {s:?}")));
        }
        let mut family: Family = name.parse()?;
        if let Some(extra) = extra {
            match (family, extra) {
                (Family::AboxM, "ends=1") => {}
                (Family::AboxM, "ends=2") => family = Family::Abox1M,
                _ => return Err(parse_error(format!("unexpected field {extra:?} in {s:?}"))),
            }
        }
        let param = match (param, family.fixed_rank()) {
            (Some(p), _) => p
                .parse()
                .map_err(|_| parse_error(format!("bad parameter {p:?} in {s:?}")))?,
            (None, Some(r)) => r,
            (None, None) => return Err(parse_error(format!("{name} needs a parameter"))),
        };
        let spec = FamilySpec { family, param };
        spec.validate()?;
        Ok(spec)
    }
}

/// `⌈x/2⌉`, also for negative `x`.
pub fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// Closed-form number of classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    Exact(u64),
    /// No closed form is known; counts come from enumeration only.
    Deferred,
}

impl ClosedForm {
    pub fn exact(self) -> Option<u64> {
        match self {
            ClosedForm::Exact(c) => Some(c),
            ClosedForm::Deferred => None,
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Exact(c) => write!(f, "{c}"),
            ClosedForm::Deferred => f.write_str("deferred"),
        }
    }
}

pub fn closed_form_count(spec: &FamilySpec) -> Result<ClosedForm> {
    spec.validate()?;
    let n = spec.param as i64;
    let k = n / 2;
    let even = n % 2 == 0;
    let c = match spec.family {
        Family::A => ceil_half(n) + 1,
        Family::AffA => {
            if even {
                k + 2
            } else {
                k + 4
            }
        }
        Family::B => 2 + ceil_half(n - 1),
        Family::AffB => {
            if even {
                k + 5
            } else {
                k + 4
            }
        }
        Family::C => n + 1,
        Family::AffC => 2 * n + 2,
        Family::D => {
            if even {
                k + 3
            } else {
                k + 2
            }
        }
        Family::AffD => {
            if even {
                k + 7
            } else {
                k + 4
            }
        }
        Family::AffE6 | Family::AffE8 | Family::AffF4 | Family::E6_2 => 4,
        Family::AffE7 => 6,
        Family::G2 => 2,
        Family::AffG2 | Family::A2_2 | Family::D4_3 => 3,
        Family::X | Family::Y => n + 3,
        Family::Z => ceil_half(n - 1) + 4,
        Family::Flower => return Ok(ClosedForm::Exact((1u64 << (n - 1)) + 1)),
        Family::AboxM => ceil_half(n - 1) + 1,
        Family::Abox1M => ceil_half(n - 2) + 2,
        Family::Bbox1 => 1 + ceil_half(n - 1),
        Family::Dbox1 => {
            if even {
                k
            } else {
                k + 2
            }
        }
        Family::E6 | Family::E7 | Family::E8 | Family::F4 => return Ok(ClosedForm::Deferred),
    };
    Ok(ClosedForm::Exact(c as u64))
}

/// Builds the diagram of a family member.
pub fn construct(spec: &FamilySpec) -> Result<Diagram> {
    spec.validate()?;
    let n = spec.param as usize;
    let b = Diagram::builder(spec.family.vertex_count(spec.param));
    // Display order for diagrams whose vertex 0 sits at index `last`.
    let zero_first = |last: usize| -> Vec<usize> { std::iter::once(last).chain(0..last).collect() };
    let b = match spec.family {
        Family::A => b.path(0..n),
        Family::AffA => b.path(0..=n).edge(n, 0).display_order(zero_first(n)),
        Family::B => b.path(0..n - 1).arrow(n - 2, n - 1),
        Family::AffB => b
            .edge(0, 1)
            .edge(n, 1)
            .path(1..n - 1)
            .arrow(n - 2, n - 1)
            .display_order(zero_first(n)),
        Family::C => b.path(0..n - 1).arrow(n - 1, n - 2),
        Family::AffC => b
            .arrow(n, 0)
            .path(0..n - 1)
            .arrow(n - 1, n - 2)
            .display_order(zero_first(n)),
        Family::D => b.path(0..n - 1).edge(n - 3, n - 1),
        Family::AffD => b
            .edge(0, 1)
            .edge(n, 1)
            .path(1..n - 1)
            .edge(n - 3, n - 1)
            .display_order(zero_first(n)),
        Family::E6 => b.path(0..5).edge(2, 5),
        Family::AffE6 => b.path(0..5).edge(2, 5).edge(5, 6).display_order(zero_first(6)),
        Family::E7 => b.path(0..6).edge(3, 6),
        Family::AffE7 => b.path(0..6).edge(3, 6).edge(5, 7).display_order(zero_first(7)),
        Family::E8 => b.path(0..7).edge(4, 7),
        Family::AffE8 => b.path(0..7).edge(4, 7).edge(8, 0).display_order(zero_first(8)),
        Family::F4 => b.edge(0, 1).arrow(2, 1).edge(2, 3),
        Family::AffF4 => b
            .edge(0, 1)
            .arrow(2, 1)
            .edge(2, 3)
            .edge(3, 4)
            .display_order(zero_first(4)),
        Family::G2 => b.multiple(1, 0, 3),
        Family::AffG2 => b.multiple(1, 0, 3).edge(1, 2).display_order(zero_first(2)),
        Family::X => b
            .arrow(n + 1, 0)
            .path(0..n)
            .arrow(n - 1, n)
            .display_order(zero_first(n + 1)),
        Family::A2_2 => b.multiple(0, 1, 4),
        Family::Y => b
            .path(0..n - 1)
            .edge(n - 3, n - 1)
            .arrow(n, 0)
            .display_order(zero_first(n)),
        Family::Z => b
            .arrow(0, n)
            .path(0..n - 1)
            .arrow(n - 2, n - 1)
            .display_order(zero_first(n)),
        Family::E6_2 => b
            .edge(4, 0)
            .edge(0, 1)
            .arrow(2, 1)
            .edge(2, 3)
            .display_order(zero_first(4)),
        Family::D4_3 => b.edge(2, 0).multiple(1, 0, 3).display_order(zero_first(2)),
        Family::Flower => (1..=n).fold(b, |b, p| b.edge(0, p)),
        Family::AboxM => b.path(0..=n).pin(n),
        Family::Abox1M => b
            .edge(n, 0)
            .path(0..n)
            .edge(n - 1, n + 1)
            .pin(n)
            .pin(n + 1)
            .display_order(zero_first(n).into_iter().chain([n + 1]).collect()),
        Family::Bbox1 => b
            .arrow(n + 1, 0)
            .path(0..n)
            .arrow(n - 1, n)
            .pin(n + 1)
            .display_order(zero_first(n + 1)),
        Family::Dbox1 => b
            .path(0..n - 1)
            .edge(n - 3, n - 1)
            .arrow(n, 0)
            .pin(n)
            .display_order(zero_first(n)),
    };
    Ok(b.name(spec.to_string()).build()?.normalize())
}

/// Labels `1, 0, 1, 0, ...` with `r` ones packed to the left of a segment of
/// length `n`.
pub fn xi(r: usize, n: usize) -> Result<Labeling> {
    check_packing(r, n)?;
    Ok(Labeling::from_ones(n, (0..r).map(|j| 2 * j)))
}

/// Mirror image of [`xi`]: `r` ones packed to the right.
pub fn eta(r: usize, n: usize) -> Result<Labeling> {
    check_packing(r, n)?;
    Ok(Labeling::from_ones(n, (0..r).map(|j| n - 1 - 2 * j)))
}

fn check_packing(r: usize, n: usize) -> Result<()> {
    if r > n.div_ceil(2) {
        return Err(Error::Precondition(format!(
            "cannot pack {r} isolated ones into {n} vertices"
        )));
    }
    Ok(())
}

/// One entry of a representative list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    /// Short name such as `xi_2` or `l_c`.
    pub name: String,
    pub labeling: Labeling,
}

// Segment builders in display order.
fn xs(r: i64, n: i64) -> String {
    xi(r as usize, n as usize)
        .expect("r within packing range")
        .to_string()
}
fn es(r: i64, n: i64) -> String {
    eta(r as usize, n as usize)
        .expect("r within packing range")
        .to_string()
}
fn zs(n: i64) -> String {
    "0".repeat(n as usize)
}

/// Representatives, one per class, in display order. `None` for the
/// diagrams without a known list (`E6`, `E7`, `E8`, `F4`).
pub fn canonical_representatives(spec: &FamilySpec) -> Result<Option<Vec<Representative>>> {
    let d = construct(spec)?;
    let n = spec.param as i64;
    let k = n / 2;
    let even = n % 2 == 0;
    let mut reps: Vec<(String, String)> = Vec::new();
    let mut push = |name: String, s: String| reps.push((name, s));
    match spec.family {
        Family::E6 | Family::E7 | Family::E8 | Family::F4 => return Ok(None),
        Family::A => {
            for i in 0..=ceil_half(n) {
                push(format!("xi_{i}"), xs(i, n));
            }
        }
        Family::AffA => {
            push("l_1".into(), "1".repeat(n as usize + 1));
            for i in 0..=ceil_half(n) {
                push(format!("0;xi_{i}"), format!("0{}", xs(i, n)));
            }
            if !even {
                push("l_2".into(), format!("10{}", "10".repeat((n as usize - 1) / 2)));
            }
        }
        Family::B => {
            push("xi_0=>1".into(), format!("{}1", zs(n - 1)));
            for j in 0..=ceil_half(n - 1) {
                push(format!("xi_{j}=>0"), format!("{}0", xs(j, n - 1)));
            }
        }
        Family::AffB => {
            // Display order: b0 b1 | neck b2..b(n-1) | ghost bn.
            let neck = n - 2;
            push("l_0".into(), zs(n + 1));
            push("l_1".into(), format!("{}1", zs(n)));
            push("l_2".into(), format!("11{}", zs(n - 1)));
            push("l_3".into(), format!("11{}1", zs(n - 2)));
            let top = if even { k - 1 } else { k };
            for i in 1..=top {
                push(format!("0/0 xi_{i}=>0"), format!("00{}0", xs(i, neck)));
            }
            if even {
                push("0/1 eta=>0".into(), format!("10{}0", es(k - 1, neck)));
                push("1/0 eta=>0".into(), format!("01{}0", es(k - 1, neck)));
            }
        }
        Family::C => {
            for i in 0..=ceil_half(n - 1) {
                push(format!("xi_{i}<=0"), format!("{}0", xs(i, n - 1)));
            }
            for i in 0..=ceil_half(n - 2) {
                push(format!("xi_{i}<=1"), format!("{}1", xs(i, n - 1)));
            }
        }
        Family::AffC => {
            for i in 0..=ceil_half(n - 1) {
                push(format!("0=>xi_{i}<=0"), format!("0{}0", xs(i, n - 1)));
            }
            for i in 0..=ceil_half(n - 2) {
                push(format!("0=>eta_{i} 0<=1"), format!("0{}01", es(i, n - 2)));
            }
            for i in 0..=ceil_half(n - 2) {
                push(format!("1=>0 xi_{i}<=0"), format!("10{}0", xs(i, n - 2)));
            }
            for i in 0..=ceil_half(n - 3) {
                push(format!("1=>0 xi_{i} 0<=1"), format!("10{}01", xs(i, n - 3)));
            }
            push("ones".into(), "1".repeat(n as usize + 1));
        }
        Family::D => {
            for (name, s) in d_reps(n) {
                push(name, s);
            }
        }
        Family::AffD => {
            // Display order: d0 d1 | spine d2..d(n-2) | d(n-1) dn.
            let spine = n - 3;
            push("l_l".into(), format!("11{}", zs(n - 1)));
            push("l_r".into(), format!("{}11", zs(n - 1)));
            push("l_c".into(), format!("11{}11", zs(spine)));
            for i in 0..k {
                push(format!("0/0 xi_{i} 0/0"), format!("00{}00", xs(i, spine)));
            }
            if even {
                // Leaf patterns x/y written as (d1, d0).
                for (name, left, right) in [
                    ("l_1", "01", "10"),
                    ("l_2", "10", "10"),
                    ("l_3", "01", "01"),
                    ("l_4", "10", "01"),
                ] {
                    push(
                        name.into(),
                        format!("{left}0{}0{right}", xs(k - 2, n - 5)),
                    );
                }
            } else {
                push("kappa".into(), format!("00{}001", xs(k - 1, n - 4)));
            }
        }
        Family::AffE6 => {
            // a0 a1 .. a6
            push("0".into(), "0000000".into());
            push("fixed".into(), "1101010".into());
            push("odd".into(), "0100000".into());
            push("even".into(), "0101000".into());
        }
        Family::AffE7 => {
            push("0".into(), "00000000".into());
            push("l_l".into(), "01010001".into());
            push("l_r".into(), "10000101".into());
            push("l_c".into(), "11010100".into());
            push("odd".into(), "01000000".into());
            push("even".into(), "01010000".into());
        }
        Family::AffE8 => {
            push("0".into(), "000000000".into());
            push("l_l".into(), "101010001".into());
            push("odd".into(), "100000000".into());
            push("even".into(), "101000000".into());
        }
        Family::AffF4 => {
            push("0".into(), "00000".into());
            push("a1".into(), "01000".into());
            push("a3".into(), "00010".into());
            push("a3+a0".into(), "10010".into());
        }
        Family::G2 => {
            push("xi_0".into(), "00".into());
            push("xi_1".into(), "10".into());
        }
        Family::AffG2 => {
            // Path 1 - 2 - 0, shown as a0 a1 a2.
            push("xi_0".into(), "000".into());
            push("xi_1".into(), "010".into());
            push("xi_2".into(), "110".into());
        }
        Family::X => {
            push("0=>xi_0=>1".into(), format!("0{}1", zs(n)));
            for i in 0..=ceil_half(n) {
                push(format!("0=>xi_{i}=>0"), format!("0{}0", xs(i, n)));
            }
            for i in 0..=ceil_half(n - 1) {
                push(format!("1=>eta_{i}=>0"), format!("1{}0", es(i, n)));
            }
        }
        Family::A2_2 => {
            push("00".into(), "00".into());
            push("01".into(), "01".into());
            push("10".into(), "10".into());
        }
        Family::Y => {
            for (name, s) in d_reps(n) {
                push(format!("0 {name}"), format!("0{s}"));
            }
            for (name, s) in dbox_reps(n) {
                push(name, s);
            }
        }
        Family::Z => {
            push("l_l".into(), format!("1{}", zs(n)));
            push("l_r".into(), format!("{}1", zs(n)));
            push("l_c".into(), format!("1{}1", zs(n - 1)));
            for i in 0..=ceil_half(n - 1) {
                push(format!("0<=xi_{i}=>0"), format!("0{}0", xs(i, n - 1)));
            }
        }
        Family::E6_2 => {
            push("000<=00".into(), "00000".into());
            push("101<=00".into(), "10100".into());
            push("100<=00".into(), "10000".into());
            push("000<=01".into(), "00001".into());
        }
        Family::D4_3 => {
            push("xi_0".into(), "000".into());
            push("xi_1".into(), "100".into());
            push("xi_2".into(), "101".into());
        }
        Family::Flower => {
            // Center first. Even sets of petals are fixed; everything else
            // forms one class represented by the lit center.
            let d_petals = n as u32;
            for petals in 0u64..1 << d_petals {
                if petals.count_ones() % 2 == 0 {
                    let s: String = std::iter::once('0')
                        .chain((0..d_petals).map(|p| if petals >> p & 1 == 1 { '1' } else { '0' }))
                        .collect();
                    push(format!("fixed {petals:b}"), s);
                }
            }
            push("odd".into(), format!("1{}", zs(n)));
        }
        Family::AboxM => {
            for i in 0..=ceil_half(n - 1) {
                push(format!("xi_{i} 0 [1]"), format!("{}01", xs(i, n - 1)));
            }
        }
        Family::Abox1M => {
            push("ones".into(), "1".repeat(n as usize + 2));
            if n == 1 {
                push("[1] 0 [1]".into(), "101".into());
            } else {
                for i in 0..=ceil_half(n - 2) {
                    push(format!("[1] 0 xi_{i} 0 [1]"), format!("10{}01", xs(i, n - 2)));
                }
            }
        }
        Family::Bbox1 => {
            for i in 0..=ceil_half(n - 1) {
                push(format!("[1] eta_{i}=>0"), format!("1{}0", es(i, n)));
            }
        }
        Family::Dbox1 => {
            for (name, s) in dbox_reps(n) {
                push(name, s);
            }
        }
    }
    reps.into_iter()
        .map(|(name, s)| {
            Ok(Representative {
                name,
                labeling: d.parse_labeling(&s)?,
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// D_n representatives on vertices 1..n.
fn d_reps(n: i64) -> Vec<(String, String)> {
    let k = n / 2;
    let mut out = Vec::new();
    if n % 2 == 0 {
        for i in 0..k {
            out.push((format!("xi_{i} 0/0"), format!("{}00", xs(i, n - 2))));
        }
        out.push(("xi 1/0".into(), format!("{}01", xs(k - 1, n - 2))));
        out.push(("xi 0/1".into(), format!("{}10", xs(k - 1, n - 2))));
    } else {
        for i in 0..=k {
            out.push((format!("xi_{i} 0/0"), format!("{}00", xs(i, n - 2))));
        }
    }
    out.push(("1/1".into(), format!("{}11", zs(n - 2))));
    out
}

/// Representatives of D_n with a pinned 1 before vertex 1, pin first.
fn dbox_reps(n: i64) -> Vec<(String, String)> {
    let k = n / 2;
    let mut out = Vec::new();
    for i in 0..k {
        out.push((format!("[1] 0 xi_{i} 0/0"), format!("10{}00", xs(i, n - 3))));
    }
    if n % 2 == 1 {
        out.push(("[1] 0 xi 1/0".into(), format!("10{}01", xs(k - 1, n - 3))));
        out.push(("[1] 0 xi 0/1".into(), format!("10{}10", xs(k - 1, n - 3))));
    }
    out
}

/// Known fixed labelings, in display order, for the diagrams where they
/// are listed explicitly. `None` elsewhere.
pub fn known_fixed_labelings(spec: &FamilySpec) -> Result<Option<Vec<Labeling>>> {
    let d = construct(spec)?;
    let n = spec.param as usize;
    let strings: Vec<String> = match spec.family {
        Family::AffA if n.is_multiple_of(2) => vec![zs(n as i64 + 1), "1".repeat(n + 1)],
        Family::AffA => vec![
            zs(n as i64 + 1),
            "1".repeat(n + 1),
            "01".repeat(n.div_ceil(2)),
            "10".repeat(n.div_ceil(2)),
        ],
        Family::AffE6 => vec![zs(7), "1101010".into()],
        Family::AffE7 => ["00000000", "01010001", "10000101", "11010100"]
            .map(String::from)
            .to_vec(),
        Family::AffE8 => vec![zs(9), "101010001".into()],
        _ => return Ok(None),
    };
    let mut out = strings
        .iter()
        .map(|s| d.parse_labeling(s))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable_by_key(|l| l.bits());
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_eta_examples() {
        assert_eq!(xi(3, 7).unwrap().to_string(), "1010100");
        assert_eq!(eta(2, 7).unwrap().to_string(), "0000101");
        assert_eq!(xi(0, 5).unwrap(), Labeling::zeros(5));
        assert!(xi(4, 6).is_err());
    }

    #[test]
    fn ceil_half_handles_negatives() {
        assert_eq!(ceil_half(-1), 0);
        assert_eq!(ceil_half(0), 0);
        assert_eq!(ceil_half(5), 3);
    }

    #[test]
    fn parse_specs() {
        let s: FamilySpec = "affD:7".parse().unwrap();
        assert_eq!(s, FamilySpec::new(Family::AffD, 7));
        assert_eq!("Abox:6:ends=1".parse::<FamilySpec>().unwrap().family, Family::AboxM);
        assert_eq!("Abox:6:ends=2".parse::<FamilySpec>().unwrap().family, Family::Abox1M);
        assert_eq!("affE7".parse::<FamilySpec>().unwrap().param, 7);
        assert!("affE7:8".parse::<FamilySpec>().is_err());
        assert!(matches!(
            "D:3".parse::<FamilySpec>(),
            Err(Error::ParameterOutOfRange { .. })
        ));
        assert!(matches!("Q:3".parse::<FamilySpec>(), Err(Error::Parse { .. })));
        assert_eq!(s.to_string().parse::<FamilySpec>().unwrap(), s);
    }

    #[test]
    fn shapes() {
        let d5 = construct(&FamilySpec::new(Family::D, 5)).unwrap();
        assert_eq!(d5.n_vertices(), 5);
        assert_eq!(d5.degree(2), 3);
        let f4 = construct(&FamilySpec::new(Family::Flower, 4)).unwrap();
        assert_eq!(f4.n_vertices(), 5);
        assert_eq!(f4.degree(0), 4);
        let ab = construct(&FamilySpec::new(Family::Abox1M, 3)).unwrap();
        assert_eq!(ab.free_count(), 3);
        assert_eq!(ab.pinned().len(), 2);
        assert!(construct(&FamilySpec::new(Family::A, 65)).is_err());
    }

    #[test]
    fn every_family_is_connected_and_normal() {
        for fam in Family::ALL {
            let spec = FamilySpec::new(fam, fam.min_param() + u32::from(fam.fixed_rank().is_none()));
            let d = construct(&spec).unwrap();
            assert!(d.is_connected(), "{spec}");
            assert!(d.is_normalized(), "{spec}");
            assert_eq!(d.n_vertices(), fam.vertex_count(spec.param), "{spec}");
        }
    }

    #[test]
    fn closed_form_examples() {
        let c = |f, p| closed_form_count(&FamilySpec::new(f, p)).unwrap();
        assert_eq!(c(Family::AffD, 6), ClosedForm::Exact(10));
        assert_eq!(c(Family::AffD, 7), ClosedForm::Exact(7));
        assert_eq!(c(Family::A, 1), ClosedForm::Exact(2));
        assert_eq!(c(Family::E7, 7), ClosedForm::Deferred);
    }

    #[test]
    fn known_fixed_sets_agree_with_linear_algebra() {
        let specs = ["affA:4", "affA:5", "affA:8", "affA:9", "affE6", "affE7", "affE8"];
        for s in specs {
            let spec: FamilySpec = s.parse().unwrap();
            let d = construct(&spec).unwrap();
            let mut solved = d.fixed_labelings().unwrap();
            solved.sort_unstable_by_key(|l| l.bits());
            assert_eq!(known_fixed_labelings(&spec).unwrap().unwrap(), solved, "{s}");
        }
        assert_eq!(known_fixed_labelings(&"D:5".parse().unwrap()).unwrap(), None);
    }
}
