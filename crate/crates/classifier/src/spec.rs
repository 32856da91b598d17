//! Almost simple groups `T ≤ G ≤ Aut(T)` described by the type of the socle
//! `T` and the part of `Out(T)` that `G` induces.

use std::fmt;

use num_bigint::BigUint;
use numtheory::PrimePowerQ;
use serde::{Deserialize, Serialize};

use crate::error::SpecError;
use crate::order;

/// Socle families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Alt,
    L,
    U,
    Sp,
    OOdd,
    OPlus,
    OMinus,
    B2Twisted,
    G2Twisted,
    F4Twisted,
    D4Twisted,
    G2,
    F4,
    E6,
    E6Twisted,
    E7,
    E8,
    Sporadic(String),
}

const LIE_CODES: &[(&str, Family)] = &[
    ("L", Family::L),
    ("U", Family::U),
    ("Sp", Family::Sp),
    ("O", Family::OOdd),
    ("O+", Family::OPlus),
    ("O-", Family::OMinus),
    ("2B2", Family::B2Twisted),
    ("2G2", Family::G2Twisted),
    ("2F4", Family::F4Twisted),
    ("3D4", Family::D4Twisted),
    ("G2", Family::G2),
    ("F4", Family::F4),
    ("E6", Family::E6),
    ("2E6", Family::E6Twisted),
    ("E7", Family::E7),
    ("E8", Family::E8),
];

impl Family {
    pub fn code(&self) -> &str {
        match self {
            Family::Alt => "A",
            Family::Sporadic(name) => name,
            other => LIE_CODES
                .iter()
                .find(|(_, f)| f == other)
                .map(|(c, _)| *c)
                .expect("listed"),
        }
    }

    pub fn from_code(code: &str) -> Result<Family, SpecError> {
        if code == "A" || code == "Alt" {
            return Ok(Family::Alt);
        }
        if let Some((_, f)) = LIE_CODES.iter().find(|(c, _)| *c == code) {
            return Ok(f.clone());
        }
        if order::sporadic(code).is_some() {
            return Ok(Family::Sporadic(code.to_string()));
        }
        Err(SpecError::UnknownFamily(code.to_string()))
    }

    pub fn is_lie_type(&self) -> bool {
        !matches!(self, Family::Alt | Family::Sporadic(_))
    }

    pub fn is_classical(&self) -> bool {
        matches!(
            self,
            Family::L | Family::U | Family::Sp | Family::OOdd | Family::OPlus | Family::OMinus
        )
    }

    /// Whether the family carries a dimension parameter.
    pub fn has_n(&self) -> bool {
        self.is_classical() || *self == Family::Alt
    }
}

/// The image of `G` in `Out(T)`, at the granularity the tables use.
///
/// `diag` and `field` are the orders of the diagonal and field parts,
/// `graph` records an involutory graph automorphism and `twisted` an
/// element outside the diagonal-by-field subgroup that is not a graph
/// automorphism: the nonsplit `L₂(q).2₃` for `L₂`, and an element of
/// `PGO⁺ ∖ PO⁺` for `PΩ⁺`. For alternating and sporadic socles the outer
/// involution is recorded as `diag = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OuterLabel {
    pub diag: u32,
    pub field: u32,
    pub graph: bool,
    pub twisted: bool,
}

impl Default for OuterLabel {
    fn default() -> Self {
        OuterLabel::trivial()
    }
}

impl OuterLabel {
    pub fn trivial() -> OuterLabel {
        OuterLabel {
            diag: 1,
            field: 1,
            graph: false,
            twisted: false,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// `|G : T|`.
    pub fn order(&self) -> u64 {
        self.diag as u64
            * self.field as u64
            * if self.graph { 2 } else { 1 }
            * if self.twisted { 2 } else { 1 }
    }

    /// Canonical tag, e.g. `1`, `d`, `d3.f2`, `g`, `t`.
    pub fn tag(&self) -> String {
        let mut parts = Vec::new();
        if self.diag > 1 {
            parts.push(format!("d{}", self.diag));
        }
        if self.field > 1 {
            parts.push(format!("f{}", self.field));
        }
        if self.graph {
            parts.push("g".to_string());
        }
        if self.twisted {
            parts.push("t".to_string());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(".")
        }
    }
}

/// An almost simple group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    /// Degree for `Alt`, dimension for classical families, 0 otherwise.
    pub n: u32,
    pub q: Option<PrimePowerQ>,
    pub outer: OuterLabel,
}

/// Flat serializable form of a [`GroupSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecRecord {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_f: Option<u32>,
    #[serde(default = "default_decoration")]
    pub decoration: String,
}

fn default_decoration() -> String {
    "1".to_string()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn big_mod(x: &BigUint, m: u64) -> u64 {
    u64::try_from(x % m).expect("residue fits")
}

fn invalid(family: &Family, reason: impl Into<String>) -> SpecError {
    SpecError::Invalid {
        family: family.code().to_string(),
        reason: reason.into(),
    }
}

impl GroupSpec {
    /// Builds and validates a spec.
    pub fn new(
        family: Family,
        n: u32,
        q: Option<PrimePowerQ>,
        outer: OuterLabel,
    ) -> Result<GroupSpec, SpecError> {
        let spec = GroupSpec {
            family,
            n,
            q,
            outer,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn alt(n: u32) -> GroupSpec {
        GroupSpec::new(Family::Alt, n, None, OuterLabel::trivial()).expect("n >= 5")
    }

    pub fn sym(n: u32) -> GroupSpec {
        let outer = OuterLabel {
            diag: 2,
            ..OuterLabel::trivial()
        };
        GroupSpec::new(Family::Alt, n, None, outer).expect("n >= 5")
    }

    pub fn lie(family: Family, n: u32, q: u64, decoration: &str) -> Result<GroupSpec, SpecError> {
        let q = PrimePowerQ::from_u64(q).map_err(|e| invalid(&family, e.to_string()))?;
        let mut spec = GroupSpec {
            family,
            n,
            q: Some(q),
            outer: OuterLabel::trivial(),
        };
        spec.outer = spec.parse_outer(decoration)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn sporadic(name: &str) -> Result<GroupSpec, SpecError> {
        let family = Family::from_code(name)?;
        if !matches!(family, Family::Sporadic(_)) {
            return Err(SpecError::UnknownFamily(name.to_string()));
        }
        GroupSpec::new(family, 0, None, OuterLabel::trivial())
    }

    pub fn with_outer(&self, decoration: &str) -> Result<GroupSpec, SpecError> {
        let mut spec = self.clone();
        spec.outer = spec.parse_outer(decoration)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn p(&self) -> u64 {
        self.q.as_ref().map_or(0, |q| q.p)
    }

    pub fn f(&self) -> u32 {
        self.q.as_ref().map_or(0, |q| q.f)
    }

    /// The order of the full diagonal automorphism group of `T`.
    pub fn full_diag(&self) -> u32 {
        let Some(q) = &self.q else {
            return match &self.family {
                Family::Alt => 2,
                Family::Sporadic(name) => order::sporadic(name).map_or(1, |s| s.out),
                _ => 1,
            };
        };
        let n = self.n as u64;
        let d = match self.family {
            Family::L => gcd(n, big_mod(&(&q.q - 1u32), n.max(1))),
            Family::U => gcd(n, big_mod(&(&q.q + 1u32), n.max(1))),
            Family::Sp | Family::OOdd => gcd(2, big_mod(&(&q.q - 1u32), 2)),
            Family::OPlus => gcd(4, big_mod(&(q.pow(self.n / 2) - 1u32), 4)),
            Family::OMinus => gcd(4, big_mod(&(q.pow(self.n / 2) + 1u32), 4)),
            Family::E6 => gcd(3, big_mod(&(&q.q - 1u32), 3)),
            Family::E6Twisted => gcd(3, big_mod(&(&q.q + 1u32), 3)),
            Family::E7 => gcd(2, big_mod(&(&q.q - 1u32), 2)),
            _ => 1,
        };
        d as u32
    }

    /// The order of the field automorphism group.
    pub fn max_field(&self) -> u32 {
        match self.family {
            Family::U => 2 * self.f(),
            Family::D4Twisted => 3 * self.f(),
            Family::Alt | Family::Sporadic(_) => 1,
            _ => self.f(),
        }
    }

    fn graph_allowed(&self) -> bool {
        match self.family {
            Family::L => self.n >= 3,
            Family::Sp => self.n == 4 && self.p() == 2,
            Family::OPlus | Family::E6 => true,
            Family::G2 => self.p() == 3,
            Family::F4 => self.p() == 2,
            _ => false,
        }
    }

    fn twisted_allowed(&self) -> bool {
        match self.family {
            Family::L => self.n == 2 && self.f().is_multiple_of(2),
            Family::OPlus => true,
            _ => false,
        }
    }

    fn parse_outer(&self, decoration: &str) -> Result<OuterLabel, SpecError> {
        let mut out = OuterLabel::trivial();
        let bad = |token: &str| SpecError::Outer {
            group: self.base_name(),
            token: token.to_string(),
        };
        for token in decoration
            .split(['.', ',', '+'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
        {
            match token {
                "1" | "trivial" => {}
                "d" | "PGL" | "PGU" | "sym" | "S" => out.diag = self.full_diag(),
                "f" | "PSigmaL" | "PSigmaU" => out.field = self.max_field(),
                "PGammaL" => {
                    out.diag = self.full_diag();
                    out.field = self.max_field();
                }
                "g" | "graph" => out.graph = true,
                "t" | "M10" => out.twisted = true,
                "2_3" => {
                    if self.family == Family::L && self.n == 3 {
                        out.graph = true;
                    } else {
                        out.twisted = true;
                    }
                }
                "2" if matches!(self.family, Family::Alt | Family::Sporadic(_)) => out.diag = 2,
                "full" | "2^2" => {
                    out.diag = self.full_diag();
                    out.field = self.max_field();
                    out.graph = self.graph_allowed();
                }
                _ => {
                    let (head, tail) = token.split_at(1);
                    let k: u32 = tail.parse().map_err(|_| bad(token))?;
                    match head {
                        "d" => out.diag = k,
                        "f" => out.field = k,
                        _ => return Err(bad(token)),
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks parameter ranges and outer-automorphism consistency.
    pub fn validate(&self) -> Result<(), SpecError> {
        let fam = &self.family;
        let n = self.n;
        match fam {
            Family::Alt => {
                if n < 5 {
                    return Err(invalid(fam, "alternating degree must be at least 5"));
                }
                if self.q.is_some() {
                    return Err(invalid(fam, "alternating groups take no field"));
                }
            }
            Family::Sporadic(name) => {
                if order::sporadic(name).is_none() {
                    return Err(SpecError::UnknownFamily(name.clone()));
                }
            }
            _ => {
                let Some(q) = &self.q else {
                    return Err(invalid(fam, "groups of Lie type need a field size"));
                };
                let (p, f) = (q.p, q.f);
                let ok = match fam {
                    Family::L => n >= 2 && !(n == 2 && q.q < BigUint::from(4u32)),
                    Family::U => n >= 3 && !(n == 3 && q.q == BigUint::from(2u32)),
                    Family::Sp => n >= 4 && n.is_multiple_of(2),
                    Family::OOdd => n >= 7 && n % 2 == 1 && p != 2,
                    Family::OPlus | Family::OMinus => n >= 8 && n.is_multiple_of(2),
                    Family::B2Twisted => p == 2 && f % 2 == 1 && f >= 3,
                    Family::G2Twisted => p == 3 && f % 2 == 1,
                    Family::F4Twisted => p == 2 && f % 2 == 1,
                    _ => n == 0,
                };
                if !ok {
                    return Err(invalid(
                        fam,
                        format!("n = {n}, q = {} is out of range", q.q),
                    ));
                }
                if !fam.is_classical() && n != 0 {
                    return Err(invalid(fam, "exceptional groups take no dimension"));
                }
            }
        }
        let o = &self.outer;
        let full = self.full_diag();
        let group = self.base_name();
        let bad = |token: String| {
            Err(SpecError::Outer {
                group: group.clone(),
                token,
            })
        };
        if o.diag == 0 || !full.is_multiple_of(o.diag) {
            return bad(format!("d{}", o.diag));
        }
        if o.field == 0 || !(self.max_field().max(1)).is_multiple_of(o.field) {
            return bad(format!("f{}", o.field));
        }
        if o.graph && !self.graph_allowed() {
            return bad("g".into());
        }
        if o.twisted && !self.twisted_allowed() {
            return bad("t".into());
        }
        if o.twisted && self.family == Family::L && (o.diag > 1 || o.field > 1) {
            return bad("t".into());
        }
        if self.is_exceptional_isomorph() && !o.is_trivial() {
            return bad(format!(
                "{} (describe the isomorphic group instead)",
                o.tag()
            ));
        }
        Ok(())
    }

    /// `Sp₄(2)′`, `G₂(2)′`, `²G₂(3)′` and `²F₄(2)′`: socles given by a derived subgroup.
    fn is_exceptional_isomorph(&self) -> bool {
        let q2 = self.q.as_ref().is_some_and(|q| q.f == 1 && q.p == 2);
        let q3 = self.q.as_ref().is_some_and(|q| q.f == 1 && q.p == 3);
        match self.family {
            Family::Sp => self.n == 4 && q2,
            Family::G2 | Family::F4Twisted => q2,
            Family::G2Twisted => q3,
            _ => false,
        }
    }

    /// `|T|`.
    pub fn socle_order(&self) -> BigUint {
        order::socle_order(self)
    }

    /// `|G|`.
    pub fn order(&self) -> BigUint {
        self.socle_order() * self.outer.order()
    }

    /// Name of the socle, e.g. `L2(9)`, `A7`, `M11`.
    pub fn base_name(&self) -> String {
        let q = self.q.as_ref().map(|q| q.q.to_string()).unwrap_or_default();
        match &self.family {
            Family::Alt => format!("A{}", self.n),
            Family::Sporadic(name) => name.clone(),
            f if f.is_classical() => format!("{}{}({q})", f.code(), self.n),
            f => format!("{}({q})", f.code()),
        }
    }

    /// Name of `G`: the socle name, with `:tag` when `G ≠ T`.
    pub fn name(&self) -> String {
        if self.family == Family::Alt && self.outer.diag == 2 {
            return format!("S{}", self.n);
        }
        if self.outer.is_trivial() {
            self.base_name()
        } else {
            format!("{}:{}", self.base_name(), self.outer.tag())
        }
    }

    /// Parses names like `A9`, `S6`, `L2(9):M10`, `PGL2(7)`, `Sz(8)`, `U3(3):f2`, `M11`.
    pub fn parse(text: &str) -> Result<GroupSpec, SpecError> {
        let text = text.trim();
        let (base, decoration) = match text.split_once(':') {
            Some((b, d)) => (b.trim(), d.trim()),
            None => (text, ""),
        };
        let perr = || SpecError::Parse(text.to_string());
        if order::sporadic(base).is_some() {
            let spec = GroupSpec::sporadic(base)?;
            return spec.with_outer(decoration);
        }
        if base == "M10" {
            return GroupSpec::lie(Family::L, 2, 9, "t");
        }
        if let Some(rest) = base
            .strip_prefix('A')
            .filter(|r| r.chars().all(|c| c.is_ascii_digit()))
        {
            let n: u32 = rest.parse().map_err(|_| perr())?;
            return GroupSpec::new(Family::Alt, n, None, OuterLabel::trivial())?
                .with_outer(decoration);
        }
        if let Some(rest) = base
            .strip_prefix('S')
            .filter(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit()))
        {
            let n: u32 = rest.parse().map_err(|_| perr())?;
            let spec = GroupSpec::new(Family::Alt, n, None, OuterLabel::trivial())?;
            let deco = if decoration.is_empty() {
                "d".to_string()
            } else {
                format!("d.{decoration}")
            };
            return spec.with_outer(&deco);
        }
        let (head, q_text) = base
            .strip_suffix(')')
            .and_then(|b| b.split_once('('))
            .ok_or_else(perr)?;
        let q: u64 = q_text.parse().map_err(|_| perr())?;
        let mut extra = String::new();
        let head = if let Some(h) = head.strip_prefix("PGL") {
            extra.push_str("d.");
            format!("L{h}")
        } else if let Some(h) = head.strip_prefix("PSigmaL") {
            extra.push_str("f.");
            format!("L{h}")
        } else if let Some(h) = head.strip_prefix("PSp") {
            format!("Sp{h}")
        } else if head == "Sz" {
            "2B2".to_string()
        } else {
            head.to_string()
        };
        let split = head.find(|c: char| c.is_ascii_digit()).filter(|&i| {
            i > 0
                && LIE_CODES
                    .iter()
                    .any(|(c, f)| *c == &head[..i] && f.is_classical())
        });
        let (code, n) = match split {
            Some(i) => (&head[..i], head[i..].parse::<u32>().map_err(|_| perr())?),
            None => (head.as_str(), 0),
        };
        let family = Family::from_code(code)?;
        if family.is_classical() && n == 0 {
            return Err(perr());
        }
        GroupSpec::lie(family, n, q, &format!("{extra}{decoration}"))
    }

    pub fn record(&self) -> SpecRecord {
        SpecRecord {
            family: self.family.code().to_string(),
            n: self.family.has_n().then_some(self.n),
            q_p: self.q.as_ref().map(|q| q.p),
            q_f: self.q.as_ref().map(|q| q.f),
            decoration: self.outer.tag(),
        }
    }

    pub fn from_record(rec: &SpecRecord) -> Result<GroupSpec, SpecError> {
        let family = Family::from_code(&rec.family)?;
        let n = rec.n.unwrap_or(0);
        let q = match (rec.q_p, rec.q_f) {
            (Some(p), Some(f)) => {
                Some(PrimePowerQ::new(p, f).map_err(|e| invalid(&family, e.to_string()))?)
            }
            (None, None) => None,
            _ => return Err(invalid(&family, "q_p and q_f must be given together")),
        };
        let mut spec = GroupSpec {
            family,
            n,
            q,
            outer: OuterLabel::trivial(),
        };
        spec.outer = spec.parse_outer(&rec.decoration)?;
        spec.validate()?;
        Ok(spec)
    }

    /// Rewrites isomorphic socles into the form the tables are stated for.
    ///
    /// `A₆` becomes `L₂(9)` for `r = 2` (the alternating rows exclude it),
    /// `L₂(4)` becomes `L₂(5)`, `L₃(2)` becomes `L₂(7)`, and the derived
    /// groups `Sp₄(2)′`, `G₂(2)′`, `²G₂(3)′` become `L₂(9)`, `U₃(3)`, `L₂(8)`.
    pub fn normalized(&self, r: u64) -> GroupSpec {
        let o = &self.outer;
        let lie = |family: Family, n: u32, q: u64, outer: OuterLabel| GroupSpec {
            family,
            n,
            q: Some(PrimePowerQ::from_u64(q).expect("prime power")),
            outer,
        };
        let qv = self.q.as_ref().and_then(|q| q.q_u64());
        match (&self.family, self.n, qv) {
            (Family::Alt, 6, _) if r == 2 => lie(
                Family::L,
                2,
                9,
                OuterLabel {
                    field: o.diag,
                    ..OuterLabel::trivial()
                },
            ),
            (Family::L, 2, Some(4)) => lie(
                Family::L,
                2,
                5,
                OuterLabel {
                    diag: o.field,
                    ..OuterLabel::trivial()
                },
            ),
            (Family::L, 3, Some(2)) => lie(
                Family::L,
                2,
                7,
                OuterLabel {
                    diag: if o.graph { 2 } else { 1 },
                    ..OuterLabel::trivial()
                },
            ),
            (Family::Sp, 4, Some(2)) => lie(Family::L, 2, 9, OuterLabel::trivial()),
            (Family::G2, 0, Some(2)) => lie(Family::U, 3, 3, OuterLabel::trivial()),
            (Family::G2Twisted, 0, Some(3)) => lie(Family::L, 2, 8, OuterLabel::trivial()),
            _ => self.clone(),
        }
    }

    /// The form used for the normalizer, core and weak-subnormality lists:
    /// `A₅` reads as `L₂(4)` for `r = 2` and `L₂(5)` otherwise, `A₆` as
    /// `L₂(9)`, and `(L₂(5), 2)` as `(L₂(4), 2)`.
    pub fn normalized_for_corollaries(&self, r: u64) -> GroupSpec {
        let s = self.normalized(r);
        let o = &s.outer;
        let lie = |q: u64, outer: OuterLabel| GroupSpec {
            family: Family::L,
            n: 2,
            q: Some(PrimePowerQ::from_u64(q).expect("prime power")),
            outer,
        };
        let qv = s.q.as_ref().and_then(|q| q.q_u64());
        match (&s.family, s.n, qv) {
            (Family::Alt, 5, _) if r == 2 => lie(
                4,
                OuterLabel {
                    field: o.diag,
                    ..OuterLabel::trivial()
                },
            ),
            (Family::Alt, 5, _) => lie(
                5,
                OuterLabel {
                    diag: o.diag,
                    ..OuterLabel::trivial()
                },
            ),
            (Family::Alt, 6, _) => lie(
                9,
                OuterLabel {
                    field: o.diag,
                    ..OuterLabel::trivial()
                },
            ),
            (Family::L, 2, Some(5)) if r == 2 => lie(
                4,
                OuterLabel {
                    field: o.diag,
                    ..OuterLabel::trivial()
                },
            ),
            _ => s,
        }
    }

    /// Whether `G ≤ PΣL₂(q)`-type containment holds: no diagonal, graph or twisted part.
    pub fn in_psigmal(&self) -> bool {
        self.outer.diag == 1 && !self.outer.graph && !self.outer.twisted
    }

    /// `G = PGL_n(q)` (the full diagonal group and nothing else).
    pub fn is_pgl(&self) -> bool {
        let o = &self.outer;
        o.diag == self.full_diag() && o.diag > 1 && o.field == 1 && !o.graph && !o.twisted
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
