//! Grading groups and color maps.
//!
//! A grading group here is an elementary abelian 2-group `Z_2^k` with
//! `k <= 3`; elements are bit vectors and the group law is XOR. A color map
//! is a sign-valued bicharacter on the group.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Largest supported rank of the grading group.
pub const MAX_RANK: u8 = 3;

/// An element of `Z_2^k`, stored as a bit vector (bit `i` = coordinate `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GradeElement(pub u8);

impl GradeElement {
    pub const IDENTITY: GradeElement = GradeElement(0);

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    /// Coordinate `i` of the bit vector.
    pub fn bit(self, i: u8) -> u8 {
        (self.0 >> i) & 1
    }
}

impl std::ops::Mul for GradeElement {
    type Output = GradeElement;

    fn mul(self, rhs: GradeElement) -> GradeElement {
        GradeElement(self.0 ^ rhs.0)
    }
}

/// The Klein four-group elements, with `e=(0,0)`, `r=(1,0)`, `s=(0,1)`, `t=(1,1)`.
pub mod klein {
    use super::GradeElement;
    pub const E: GradeElement = GradeElement(0b00);
    pub const R: GradeElement = GradeElement(0b01);
    pub const S: GradeElement = GradeElement(0b10);
    pub const T: GradeElement = GradeElement(0b11);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GradeGroup {
    rank: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("grading group of rank {0} exceeds the supported maximum of {MAX_RANK}")]
    GroupTooLarge(u8),
    #[error("unknown degree `{0}`")]
    UnknownDegree(String),
}

impl GradeGroup {
    pub fn new(rank: u8) -> Result<Self, GroupError> {
        if rank > MAX_RANK {
            return Err(GroupError::GroupTooLarge(rank));
        }
        Ok(GradeGroup { rank })
    }

    pub fn trivial() -> Self {
        GradeGroup { rank: 0 }
    }

    pub fn z2() -> Self {
        GradeGroup { rank: 1 }
    }

    pub fn klein() -> Self {
        GradeGroup { rank: 2 }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn order(&self) -> usize {
        1 << self.rank
    }

    pub fn elements(&self) -> impl Iterator<Item = GradeElement> {
        (0..self.order() as u8).map(GradeElement)
    }

    pub fn contains(&self, g: GradeElement) -> bool {
        (g.0 as usize) < self.order()
    }

    pub fn is_klein(&self) -> bool {
        self.rank == 2
    }

    /// Display name of an element: `0`/`1` on `Z_2`, `e`/`r`/`s`/`t` on the
    /// Klein group, the bit string otherwise.
    pub fn name(&self, g: GradeElement) -> String {
        match self.rank {
            1 => g.0.to_string(),
            2 => ["e", "r", "s", "t"][g.0 as usize].to_string(),
            _ => (0..self.rank).map(|i| char::from(b'0' + g.bit(i))).collect(),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<GradeElement, GroupError> {
        self.elements()
            .find(|&g| self.name(g) == text)
            .ok_or_else(|| GroupError::UnknownDegree(text.to_string()))
    }

    /// All group automorphisms, i.e. `GL(k, F_2)`, each given as the image
    /// table indexed by element.
    pub fn automorphisms(&self) -> Vec<Vec<GradeElement>> {
        let k = self.rank as usize;
        let n = self.order();
        let mut out = Vec::new();
        // choose images of the k generators
        let mut images = vec![0usize; k];
        loop {
            let table: Vec<GradeElement> = (0..n)
                .map(|g| {
                    let mut img = 0u8;
                    for (i, im) in images.iter().enumerate() {
                        if (g >> i) & 1 == 1 {
                            img ^= *im as u8;
                        }
                    }
                    GradeElement(img)
                })
                .collect();
            let distinct: BTreeSet<_> = table.iter().collect();
            if distinct.len() == n {
                out.push(table);
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == k {
                    return out;
                }
                images[pos] += 1;
                if images[pos] < n {
                    break;
                }
                images[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// The bicharacter axioms checked by [`validate_color`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorAxiom {
    /// `θ(a,b)θ(b,a) = 1`
    SymmetryPairing,
    /// `θ(a,bc) = θ(a,b)θ(a,c)`
    LeftMultiplicative,
    /// `θ(ab,c) = θ(a,c)θ(b,c)`
    RightMultiplicative,
    /// `θ(e,a) = θ(a,e) = 1`
    Identity,
    /// table entry outside `{-1, +1}`
    SignValue,
}

impl fmt::Display for ColorAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ColorAxiom::SymmetryPairing => "symmetry-pairing",
            ColorAxiom::LeftMultiplicative => "left-multiplicative",
            ColorAxiom::RightMultiplicative => "right-multiplicative",
            ColorAxiom::Identity => "identity",
            ColorAxiom::SignValue => "sign-value",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("color violates the {axiom} axiom at {witness:?}")]
    ViolatedAxiom {
        axiom: ColorAxiom,
        witness: Vec<GradeElement>,
    },
    #[error("color table has {found} entries, expected {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("unknown color `{0}`")]
    UnknownColor(String),
}

/// A validated sign-valued bicharacter `θ: G × G → {±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorMap {
    group: GradeGroup,
    table: Vec<i8>,
}

/// Checks the bicharacter axioms for a candidate row-major sign table.
pub fn validate_color(group: GradeGroup, table: &[i8]) -> Result<ColorMap, ColorError> {
    let n = group.order();
    if table.len() != n * n {
        return Err(ColorError::WrongSize {
            expected: n * n,
            found: table.len(),
        });
    }
    let at = |a: usize, b: usize| table[a * n + b];
    let el = |x: usize| GradeElement(x as u8);
    for a in 0..n {
        for b in 0..n {
            if at(a, b) != 1 && at(a, b) != -1 {
                return Err(ColorError::ViolatedAxiom {
                    axiom: ColorAxiom::SignValue,
                    witness: vec![el(a), el(b)],
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if at(a, b) * at(b, a) != 1 {
                return Err(ColorError::ViolatedAxiom {
                    axiom: ColorAxiom::SymmetryPairing,
                    witness: vec![el(a), el(b)],
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(a, b ^ c) != at(a, b) * at(a, c) {
                    return Err(ColorError::ViolatedAxiom {
                        axiom: ColorAxiom::LeftMultiplicative,
                        witness: vec![el(a), el(b), el(c)],
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(a ^ b, c) != at(a, c) * at(b, c) {
                    return Err(ColorError::ViolatedAxiom {
                        axiom: ColorAxiom::RightMultiplicative,
                        witness: vec![el(a), el(b), el(c)],
                    });
                }
            }
        }
    }
    for a in 0..n {
        if at(0, a) != 1 || at(a, 0) != 1 {
            return Err(ColorError::ViolatedAxiom {
                axiom: ColorAxiom::Identity,
                witness: vec![el(0), el(a)],
            });
        }
    }
    Ok(ColorMap {
        group,
        table: table.to_vec(),
    })
}

impl ColorMap {
    pub fn group(&self) -> GradeGroup {
        self.group
    }

    /// `θ(a, b)` as `+1` or `-1`.
    pub fn sign(&self, a: GradeElement, b: GradeElement) -> i8 {
        self.table[a.0 as usize * self.group.order() + b.0 as usize]
    }

    pub fn table(&self) -> &[i8] {
        &self.table
    }

    /// The trivial color (`θ ≡ 1`) on any group.
    pub fn trivial(group: GradeGroup) -> Self {
        let n = group.order();
        ColorMap {
            group,
            table: vec![1; n * n],
        }
    }

    /// The super sign `(-1)^{ab}` on `Z_2`.
    pub fn super_sign() -> Self {
        ColorMap {
            group: GradeGroup::z2(),
            table: vec![1, 1, 1, -1],
        }
    }

    /// One of the four Klein colors `θ_1..θ_4`.
    pub fn klein(index: usize) -> Self {
        let table: [i8; 16] = match index {
            1 => [1; 16],
            2 => [1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1],
            3 => [1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1],
            4 => [1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, 1],
            _ => panic!("Klein colors are numbered 1..=4"),
        };
        ColorMap {
            group: GradeGroup::klein(),
            table: table.to_vec(),
        }
    }

    /// Resolves a built-in color name: `trivial`, `super`, `theta1`..`theta4`.
    /// `trivial` uses the supplied group.
    pub fn builtin(name: &str, group: GradeGroup) -> Result<Self, ColorError> {
        match name {
            "trivial" => Ok(ColorMap::trivial(group)),
            "super" => Ok(ColorMap::super_sign()),
            "theta1" => Ok(ColorMap::klein(1)),
            "theta2" => Ok(ColorMap::klein(2)),
            "theta3" => Ok(ColorMap::klein(3)),
            "theta4" => Ok(ColorMap::klein(4)),
            other => Err(ColorError::UnknownColor(other.to_string())),
        }
    }

    /// The built-in name of this color, if it has one. On the Klein group the
    /// all-ones table is reported as `theta1`.
    pub fn builtin_name(&self) -> Option<&'static str> {
        if self.group.is_klein() {
            return (1..=4)
                .find(|&i| *self == ColorMap::klein(i))
                .map(|i| ["theta1", "theta2", "theta3", "theta4"][i - 1]);
        }
        if *self == ColorMap::trivial(self.group) {
            Some("trivial")
        } else if *self == ColorMap::super_sign() {
            Some("super")
        } else {
            None
        }
    }

    /// The color transported along a group automorphism `σ`:
    /// `(σθ)(σa, σb) = θ(a, b)`.
    pub fn transport(&self, sigma: &[GradeElement]) -> ColorMap {
        let n = self.group.order();
        let mut table = vec![0i8; n * n];
        for a in 0..n {
            for b in 0..n {
                let (sa, sb) = (sigma[a].0 as usize, sigma[b].0 as usize);
                table[sa * n + sb] = self.table[a * n + b];
            }
        }
        ColorMap {
            group: self.group,
            table,
        }
    }

    /// Restriction to the subgroup generated by a single element `g`,
    /// viewed as a color on `Z_2` (`1 ↦ g`).
    pub fn restrict_to_cyclic(&self, g: GradeElement) -> ColorMap {
        let s = self.sign(g, g);
        ColorMap {
            group: GradeGroup::z2(),
            table: vec![1, 1, 1, s],
        }
    }
}

/// Result of [`enumerate_colors`].
#[derive(Clone, Debug)]
pub struct ColorEnumeration {
    pub colors: Vec<ColorMap>,
    /// Each orbit is a list of indices into `colors`; orbits are ordered by
    /// their smallest member.
    pub orbits: Vec<Vec<usize>>,
}

impl ColorEnumeration {
    /// A representative per orbit: the built-in named color when the orbit
    /// contains one, otherwise the first member.
    pub fn representatives(&self) -> Vec<&ColorMap> {
        self.orbits
            .iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .map(|&i| &self.colors[i])
                    .find(|c| c.builtin_name().is_some())
                    .unwrap_or(&self.colors[orbit[0]])
            })
            .collect()
    }
}

/// All bicharacters on the group, with their orbits under `Aut(G)`.
///
/// A bicharacter is fixed by its values on pairs of generators, so the
/// search runs over the `2^(k^2)` generator tables and keeps those that pass
/// [`validate_color`].
pub fn enumerate_colors(group: GradeGroup) -> Result<ColorEnumeration, ColorError> {
    if group.rank() > MAX_RANK {
        return Err(GroupError::GroupTooLarge(group.rank()).into());
    }
    let k = group.rank() as usize;
    let n = group.order();
    let mut colors = Vec::new();
    for mask in 0u32..(1u32 << (k * k)) {
        // exponent bit for generator pair (i, j) is bit i*k + j of mask
        let mut table = vec![0i8; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut parity = 0;
                for i in 0..k {
                    for j in 0..k {
                        parity ^= ((a >> i) & 1) & ((b >> j) & 1) & ((mask >> (i * k + j)) & 1) as usize;
                    }
                }
                table[a * n + b] = if parity == 1 { -1 } else { 1 };
            }
        }
        if let Ok(c) = validate_color(group, &table) {
            colors.push(c);
        }
    }
    colors.sort_by(|a, b| b.table.cmp(&a.table));
    let autos = group.automorphisms();
    let mut orbit_of = vec![usize::MAX; colors.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..colors.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = BTreeSet::new();
        for sigma in &autos {
            let image = colors[i].transport(sigma);
            let j = colors
                .iter()
                .position(|c| *c == image)
                .expect("automorphism images of a bicharacter are bicharacters");
            members.insert(j);
        }
        for &j in &members {
            orbit_of[j] = id;
        }
        orbits.push(members.into_iter().collect());
    }
    Ok(ColorEnumeration { colors, orbits })
}

/// A symmetric `F_2`-bilinear form `f` with `θ = (-1)^f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentForm {
    rank: u8,
    /// `coeffs[i][j]` multiplies `x_i * y_j`.
    coeffs: Vec<Vec<u8>>,
}

impl ExponentForm {
    pub fn eval(&self, x: GradeElement, y: GradeElement) -> u8 {
        let mut acc = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc ^= x.bit(i) & y.bit(j) & self.coeffs[i as usize][j as usize];
            }
        }
        acc
    }

    pub fn coeffs(&self) -> &[Vec<u8>] {
        &self.coeffs
    }
}

impl fmt::Display for ExponentForm {
    /// Klein forms print in the pair notation `((a1,b1),(a2,b2))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |i: u8, side: u8| -> String {
            if self.rank == 2 {
                format!("{}{}", if i == 0 { 'a' } else { 'b' }, side)
            } else {
                format!("x{}_{}", i + 1, side)
            }
        };
        let mut terms = Vec::new();
        for i in 0..self.rank {
            for j in 0..self.rank {
                if self.coeffs[i as usize][j as usize] == 1 {
                    terms.push(if i <= j {
                        format!("{}{}", var(i, 1), var(j, 2))
                    } else {
                        format!("{}{}", var(j, 2), var(i, 1))
                    });
                }
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Recovers the exponent form of a color from its values on generator pairs.
pub fn color_exponent_form(color: &ColorMap) -> ExponentForm {
    let k = color.group().rank();
    let coeffs = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| u8::from(color.sign(GradeElement(1 << i), GradeElement(1 << j)) < 0))
                .collect()
        })
        .collect();
    ExponentForm { rank: k, coeffs }
}
