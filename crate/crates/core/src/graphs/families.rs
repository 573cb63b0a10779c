//! The 21 families (†) with Dyn(S) = 2[2^4] + (†).

use std::collections::BTreeSet;

use serde::Serialize;

use super::{parse_dynkin, DynkinType};
use crate::error::{LdpError, Result};

pub struct Family {
    pub id: u8,
    pub template: &'static str,
    pub uses_n: bool,
    pub uses_m: bool,
    /// Inclusive range for l, if the family has that parameter.
    pub l_range: Option<(u32, u32)>,
    build: fn(u32, u32, u32) -> String,
}

impl Family {
    pub fn uses_l(&self) -> bool {
        self.l_range.is_some()
    }
}

macro_rules! fam {
    ($id:expr, $t:expr, $n:expr, $m:expr, $l:expr, $b:expr) => {
        Family {
            id: $id,
            template: $t,
            uses_n: $n,
            uses_m: $m,
            l_range: $l,
            build: $b,
        }
    };
}

static FAMILIES: [Family; 21] = [
    fam!(1, "[3]", false, false, None, |_, _, _| "[3]".into()),
    fam!(2, "[2,4]", false, false, None, |_, _, _| "[2,4]".into()),
    fam!(3, "[2]+[3]+[5]", false, false, None, |_, _, _| {
        "[2]+[3]+[5]".into()
    }),
    fam!(
        4,
        "[2^n]+[2+n;[2],[3],[5]]",
        true,
        false,
        None,
        |n, _, _| format!("[2^{n}]+[{};[2],[3],[5]]", 2 + n)
    ),
    fam!(
        5,
        "[2^n,3]+[3,2+n,5]",
        true,
        false,
        None,
        |n, _, _| format!("[2^{n},3]+[3,{},5]", 2 + n)
    ),
    fam!(
        6,
        "[2^n,4]+[2,2+n,5]",
        true,
        false,
        None,
        |n, _, _| format!("[2^{n},4]+[2,{},5]", 2 + n)
    ),
    fam!(
        7,
        "[2^n,6]+[2,2+n,3]",
        true,
        false,
        None,
        |n, _, _| format!("[2^{n},6]+[2,{},3]", 2 + n)
    ),
    fam!(8, "[4]+[2;[2],[3],[5]]", false, false, None, |_, _, _| {
        "[4]+[2;[2],[3],[5]]".into()
    }),
    fam!(
        9,
        "[3,2^{m-1},3]+[2+m;[2],[3],[5]]",
        false,
        true,
        None,
        |_, m, _| { format!("[3,2^{},3]+[{};[2],[3],[5]]", m - 1, 2 + m) }
    ),
    fam!(
        10,
        "[4+l]+[2;[2],[2^l],[5]]",
        false,
        false,
        Some((1, 2)),
        |_, _, l| { format!("[{}]+[2;[2],[2^{l}],[5]]", 4 + l) }
    ),
    fam!(
        11,
        "[2+l,2^{m-1},4]+[2+m;[2],[2^l],[5]]",
        false,
        true,
        Some((1, 2)),
        |_, m, l| { format!("[{},2^{},4]+[{};[2],[2^{l}],[5]]", 2 + l, m - 1, 2 + m) }
    ),
    fam!(
        12,
        "[2,5]+[2;[2],[3],[5]]",
        false,
        false,
        None,
        |_, _, _| "[2,5]+[2;[2],[3],[5]]".into()
    ),
    fam!(
        13,
        "[2,3,2^{m-1},4]+[2+m;[2],[3],[5]]",
        false,
        true,
        None,
        |_, m, _| { format!("[2,3,2^{},4]+[{};[2],[3],[5]]", m - 1, 2 + m) }
    ),
    fam!(
        14,
        "[6+l]+[2;[2],[3],[2^l]]",
        false,
        false,
        Some((1, 4)),
        |_, _, l| { format!("[{}]+[2;[2],[3],[2^{l}]]", 6 + l) }
    ),
    fam!(
        15,
        "[2+l,2^{m-1},6]+[2+m;[2],[3],[2^l]]",
        false,
        true,
        Some((1, 4)),
        |_, m, l| { format!("[{},2^{},6]+[{};[2],[3],[2^{l}]]", 2 + l, m - 1, 2 + m) }
    ),
    fam!(
        16,
        "[2^l,7]+[2;[2],[3],[2+l]]",
        false,
        false,
        Some((1, 3)),
        |_, _, l| { format!("[2^{l},7]+[2;[2],[3],[{}]]", 2 + l) }
    ),
    fam!(
        17,
        "[2^l,3,2^{m-1},6]+[2+m;[2],[3],[2+l]]",
        false,
        true,
        Some((1, 3)),
        |_, m, l| { format!("[2^{l},3,2^{},6]+[{};[2],[3],[{}]]", m - 1, 2 + m, 2 + l) }
    ),
    fam!(
        18,
        "[3,7]+[2;[2],[3],[3,2]]",
        false,
        false,
        None,
        |_, _, _| "[3,7]+[2;[2],[3],[3,2]]".into()
    ),
    fam!(
        19,
        "[3,3,2^{m-1},6]+[2+m;[2],[3],[3,2]]",
        false,
        true,
        None,
        |_, m, _| { format!("[3,3,2^{},6]+[{};[2],[3],[3,2]]", m - 1, 2 + m) }
    ),
    fam!(
        20,
        "[2,8]+[2;[2],[3],[2,3]]",
        false,
        false,
        None,
        |_, _, _| "[2,8]+[2;[2],[3],[2,3]]".into()
    ),
    fam!(
        21,
        "[2,4,2^{m-1},6]+[2+m;[2],[3],[2,3]]",
        false,
        true,
        None,
        |_, m, _| { format!("[2,4,2^{},6]+[{};[2],[3],[2,3]]", m - 1, 2 + m) }
    ),
];

pub fn families() -> &'static [Family] {
    &FAMILIES
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyInstance {
    pub family: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
}

impl FamilyInstance {
    pub fn family(family: u8) -> Self {
        FamilyInstance {
            family,
            n: None,
            m: None,
            l: None,
        }
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_l(mut self, l: u32) -> Self {
        self.l = Some(l);
        self
    }
}

/// The (†) part alone, as notation text.
pub fn dagger_notation(inst: &FamilyInstance) -> Result<String> {
    let fam = FAMILIES
        .get((inst.family as usize).wrapping_sub(1))
        .ok_or(LdpError::UnknownFamily(inst.family))?;
    let bad = |param, value: Option<u32>| LdpError::ParamOutOfRange {
        family: fam.id,
        param,
        value: value.map(|v| v as i64).unwrap_or(-1),
    };
    let n = match (fam.uses_n, inst.n) {
        (true, Some(n)) => n,
        (false, None) => 0,
        (_, v) => return Err(bad('n', v)),
    };
    let m = match (fam.uses_m, inst.m) {
        (true, Some(m)) if m >= 1 => m,
        (false, None) => 1,
        (_, v) => return Err(bad('m', v)),
    };
    let l = match (fam.l_range, inst.l) {
        (Some((lo, hi)), Some(l)) if (lo..=hi).contains(&l) => l,
        (None, None) => 0,
        (_, v) => return Err(bad('l', v)),
    };
    if n > 10_000 || m > 10_000 {
        return Err(bad(if n > 10_000 { 'n' } else { 'm' }, Some(n.max(m))));
    }
    Ok((fam.build)(n, m, l))
}

/// 2[2^4] + (†).
pub fn family_type(inst: &FamilyInstance) -> Result<DynkinType> {
    let dagger = dagger_notation(inst)?;
    parse_dynkin(&format!("2[2^4]+{dagger}"))
}

#[derive(Debug, Clone, Copy)]
pub struct ParamRange {
    pub lo: u32,
    pub hi: u32,
}

/// All instances in the given parameter boxes, deduplicated by canonical type.
/// `l = None` means every legal value of l.
pub fn enumerate_families(
    n: ParamRange,
    m: ParamRange,
    l: Option<ParamRange>,
) -> Vec<(FamilyInstance, DynkinType)> {
    let mut out = vec![];
    let mut seen = BTreeSet::new();
    for fam in FAMILIES.iter() {
        let ns: Vec<Option<u32>> = if fam.uses_n {
            (n.lo..=n.hi).map(Some).collect()
        } else {
            vec![None]
        };
        let ms: Vec<Option<u32>> = if fam.uses_m {
            (m.lo.max(1)..=m.hi).map(Some).collect()
        } else {
            vec![None]
        };
        let ls: Vec<Option<u32>> = match fam.l_range {
            None => vec![None],
            Some((lo, hi)) => {
                let (a, b) = l.map(|r| (r.lo.max(lo), r.hi.min(hi))).unwrap_or((lo, hi));
                (a..=b).map(Some).collect()
            }
        };
        for &nv in &ns {
            for &mv in &ms {
                for &lv in &ls {
                    let inst = FamilyInstance {
                        family: fam.id,
                        n: nv,
                        m: mv,
                        l: lv,
                    };
                    let t = family_type(&inst).expect("enumerated parameters are in range");
                    if seen.insert(t.to_string()) {
                        out.push((inst, t));
                    }
                }
            }
        }
    }
    out
}
