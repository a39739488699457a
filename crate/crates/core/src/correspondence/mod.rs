//! Maps between the models: walls to reverse tableaux (`phi`), reverse
//! tableaux to KN tableaux (`psi`), and an end-to-end check of the chain.

mod boxes;

pub use boxes::{top_blocks, BlockKind, BoxRule, BoxStep, BoxTable, TopBlock};

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::graph::{crystal_isomorphic, generate_component, Component, DEFAULT_NODE_CAP};
use crate::kn::{KnModel, KnTableau};
use crate::letters::{Letter, SpinColumn};
use crate::lie::{Family, LieType, Weight};
use crate::reverse::{RevModel, RevTableau};
use crate::tableau::Tableau;
use crate::walls::decompose::letter_at;
use crate::walls::{wall_component, WallLayout, YoungWall};
use crate::weyl_dim;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

fn b_table() -> &'static BoxTable {
    static TABLE: OnceLock<BoxTable> = OnceLock::new();
    TABLE.get_or_init(|| BoxTable::of(Family::B))
}

/// Position of the top of column `a` of part `k` in the part's frame.
fn frame_position(layout: &WallLayout, y: &YoungWall, k: usize, a: usize) -> Result<usize> {
    layout
        .top(y, k, a)
        .filter(|&p| p <= 2 * layout.n)
        .ok_or_else(|| Error::UnmatchedTop(format!("column {a} of part {k} lies outside its frame")))
}

/// Read column `a` of part `k` with the table and check it against the frame.
fn read_column(layout: &WallLayout, y: &YoungWall, k: usize, a: usize, step: BoxStep) -> Result<Letter> {
    let n = layout.n;
    let p = frame_position(layout, y, k, a)?;
    let col = layout.columns(k).start + a - 1;
    let letter = b_table().lookup(n, step, &top_blocks(y, col))?;
    if letter != letter_at(n, p) {
        return Err(Error::UnmatchedTop(format!(
            "column {a} of part {k} reads {letter} but stands at the height of {}",
            letter_at(n, p)
        )));
    }
    Ok(letter)
}

/// The reverse tableau of a `B_n` wall in the classical component of
/// highest weight `lam`.
///
/// Each full part gives one column, read from its columns left to right as
/// top to bottom. The spin part gives a half column: barred entries from
/// columns above the highest wall, the missing unbarred indices from the
/// rest. Columns go left to right in the order of the parts from the right.
pub fn phi(y: &YoungWall, lam: &Weight) -> Result<RevTableau> {
    let layout = WallLayout::over(y.ground, lam)?;
    let n = layout.n;
    if (layout.width()..y.cols.len()).any(|c| y.added(c) > 0) {
        return Err(Error::Decomposition(format!("wall is wider than the {} columns of {lam}", layout.width())));
    }
    let mut t = Tableau::empty();
    for k in 0..layout.omegas.len() {
        let col = (1..=layout.part_width(k))
            .rev()
            .map(|a| read_column(&layout, y, k, a, BoxStep::Full))
            .collect::<Result<Vec<_>>>()?;
        t.cols.push(col);
    }
    if layout.spin {
        let k = layout.omegas.len();
        let mut barred = Vec::new();
        let mut bare = 0;
        for a in 1..=n {
            if frame_position(&layout, y, k, a)? == n {
                bare += 1;
            } else {
                barred.push(read_column(&layout, y, k, a, BoxStep::Spin)?);
            }
        }
        let used: BTreeSet<u8> = barred.iter().map(|l| l.index()).collect();
        let mut letters = barred.clone();
        letters.extend((1..=n as u8).filter(|j| !used.contains(j)).map(Letter::Plain));
        let spin = SpinColumn::from_letters(n, &letters)
            .filter(|_| letters.len() - barred.len() == bare)
            .ok_or_else(|| Error::UnmatchedTop(format!("spin part repeats an index: {barred:?}")))?;
        t.spin = Some(spin);
    }
    Ok(t)
}

/// The KN tableau matching `t` under the crystal isomorphism `T(λ) → B(λ)`,
/// found by raising `t` to the highest element (smallest colour first) and
/// lowering the highest KN tableau along the reversed path.
pub fn psi(ty: LieType, t: &RevTableau, lam: &Weight) -> Result<KnTableau> {
    psi_with(ty, t, lam, false)
}

/// [`psi`], raising with the largest colour first when `largest_first`.
pub fn psi_with(ty: LieType, t: &RevTableau, lam: &Weight, largest_first: bool) -> Result<KnTableau> {
    let rev = RevModel::new(ty, lam)?;
    if !rev.valid(t)? {
        return Err(Error::NotInModel(t.to_string()));
    }
    let (top, path) = rev.raise_to_highest(t, largest_first);
    if top != rev.highest() {
        return Err(Error::NotInModel(t.to_string()));
    }
    let kn = KnModel::new(ty, lam)?;
    let mut b = kn.highest();
    for (step, &i) in path.iter().rev().enumerate() {
        b = kn.f(i, &b).ok_or(Error::StringBroken(step))?;
    }
    Ok(b)
}

/// Whether `phi(f_i y) = f_i phi(y)` for every wall of `walls` and every
/// classical colour, undefined sides included.
pub fn phi_intertwines(walls: &[YoungWall], lam: &Weight) -> Result<bool> {
    let Some(first) = walls.first() else { return Ok(true) };
    let ty = LieType::b(first.n());
    let rev = RevModel::new(ty, lam)?;
    for y in walls {
        let t = phi(y, lam)?;
        for i in ty.colors() {
            let lhs = y.wall_f(i).map(|z| phi(&z, lam)).transpose()?;
            if lhs != rev.f(i, &t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A reference value of `psi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PsiFixture {
    pub ty: LieType,
    pub weight: Vec<i64>,
    pub rev: RevTableau,
    pub kn: KnTableau,
}

impl PsiFixture {
    pub fn parse(text: &str) -> Result<PsiFixture> {
        let mut fields = BTreeMap::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (k, v) = line.split_once(' ').ok_or_else(|| Error::Parse(format!("bad fixture line {line:?}")))?;
            fields.insert(k, v.trim());
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| Error::Parse(format!("fixture lacks {k}")));
        let ty = get("type")?.parse()?;
        let weight = get("weight")?
            .split_whitespace()
            .map(|c| c.parse::<i64>().map_err(|_| Error::Parse(format!("bad coefficient {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(PsiFixture { ty, weight, rev: get("rev")?.parse()?, kn: get("kn")?.parse()? })
    }

    /// Whether `psi` reproduces the fixture.
    pub fn check(&self) -> Result<bool> {
        let lam = self.ty.weight_from_fundamental(&self.weight)?;
        Ok(psi(self.ty, &self.rev, &lam)? == self.kn)
    }
}

/// The shipped `psi` fixtures.
pub fn psi_fixtures() -> Vec<PsiFixture> {
    [include_str!("../../fixtures/psi/b4_w1_w2_w3.txt"), include_str!("../../fixtures/psi/d4_w1_w2_spin.txt")]
        .into_iter()
        .map(|t| PsiFixture::parse(t).expect("shipped fixture parses"))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DimCheck {
    pub weyl_dim: u64,
    pub ok: bool,
}

/// Outcome of [`verify_chain`]. Checks that do not apply are `None`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ChainReport {
    pub lie_type: String,
    pub weight: Vec<i64>,
    pub model_sizes: BTreeMap<String, usize>,
    /// Each component equals the corresponding enumerated set.
    pub enumeration_ok: bool,
    pub iso_ok: bool,
    pub phi_ok: Option<bool>,
    pub psi_ok: bool,
    pub psi_fixture_ok: Option<bool>,
    pub dims_vs_oracle: DimCheck,
}

impl ChainReport {
    pub fn all_ok(&self) -> bool {
        self.enumeration_ok
            && self.iso_ok
            && self.phi_ok != Some(false)
            && self.psi_ok
            && self.psi_fixture_ok != Some(false)
            && self.dims_vs_oracle.ok
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Map of `g1` onto `g2` when both are isomorphic highest-weight graphs.
fn iso<A, B>(a: &Component<A>, b: &Component<B>) -> Result<Option<Vec<usize>>> {
    crystal_isomorphic(&a.graph, &b.graph)
}

/// Build every model of `B(lam)`, check they are isomorphic and that `phi`
/// and `psi` are the isomorphisms.
pub fn verify_chain(ty: LieType, lam: &Weight) -> Result<ChainReport> {
    verify_chain_with_cap(ty, lam, DEFAULT_NODE_CAP)
}

pub fn verify_chain_with_cap(ty: LieType, lam: &Weight, cap: usize) -> Result<ChainReport> {
    let coords = ty.fundamental_coords(lam)?;
    let colors = ty.colors();
    let kn = KnModel::new(ty, lam)?;
    let rev = RevModel::new(ty, lam)?;
    let kn_comp = generate_component(&kn, &kn.highest(), &colors, cap)?;
    let rev_comp = generate_component(&rev, &rev.highest(), &colors, cap)?;
    let mut sizes = BTreeMap::from([("kn".to_string(), kn_comp.len()), ("rev".to_string(), rev_comp.len())]);

    let as_set = |v: &[Tableau]| v.iter().cloned().collect::<BTreeSet<_>>();
    let enumeration_ok = as_set(&kn.enumerate(cap)?) == as_set(&kn_comp.elems)
        && as_set(&rev.enumerate(cap)?) == as_set(&rev_comp.elems);

    let rev_to_kn = iso(&rev_comp, &kn_comp)?;
    let mut iso_ok = rev_to_kn.is_some();
    let psi_ok = match &rev_to_kn {
        None => false,
        Some(map) => rev_comp.elems.iter().zip(map).all(|(t, &k)| {
            let want = Some(&kn_comp.elems[k]);
            psi_with(ty, t, lam, false).ok().as_ref() == want && psi_with(ty, t, lam, true).ok().as_ref() == want
        }),
    };

    let phi_ok = if ty.family == Family::B {
        let highest = WallLayout::new(ty.rank, lam)?.highest()?;
        let walls = wall_component(&highest, true, cap)?;
        sizes.insert("wall".to_string(), walls.len());
        let wall_to_rev = iso(&walls, &rev_comp)?;
        iso_ok &= wall_to_rev.is_some();
        Some(match wall_to_rev {
            None => false,
            Some(map) => walls.elems.iter().zip(map).all(|(y, k)| phi(y, lam).ok().as_ref() == Some(&rev_comp.elems[k])),
        })
    } else {
        None
    };

    let fixtures: Vec<PsiFixture> =
        psi_fixtures().into_iter().filter(|f| f.ty == ty && f.weight == coords).collect();
    let psi_fixture_ok = if fixtures.is_empty() {
        None
    } else {
        Some(fixtures.iter().all(|f| f.check().unwrap_or(false)))
    };

    let dim = weyl_dim(ty, lam)?;
    let dims_ok = sizes.values().all(|&s| s as u128 == dim);
    Ok(ChainReport {
        lie_type: ty.to_string(),
        weight: coords,
        model_sizes: sizes,
        enumeration_ok,
        iso_ok,
        phi_ok,
        psi_ok,
        psi_fixture_ok,
        dims_vs_oracle: DimCheck { weyl_dim: dim as u64, ok: dims_ok },
    })
}
