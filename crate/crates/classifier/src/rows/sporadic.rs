//! Rows for odd `r` with sporadic socle and `G = T`.

use num_bigint::BigUint;

use super::Fired;
use crate::ctx::Ctx;
use crate::order::sporadic;
use crate::spec::Family;
use crate::trace::OuterFlag;

pub(crate) struct SporadicRow {
    pub id: &'static str,
    pub group: &'static str,
    pub r: u64,
    pub h: &'static str,
    /// `|H|`; `None` when it is a multiple of another sporadic order.
    pub order: Option<&'static str>,
}

const fn row(
    id: &'static str,
    group: &'static str,
    r: u64,
    h: &'static str,
    order: &'static str,
) -> SporadicRow {
    SporadicRow {
        id,
        group,
        r,
        h,
        order: Some(order),
    }
}

pub(crate) const ROWS: &[SporadicRow] = &[
    row("sporadic:M11:11", "M11", 11, "L_2(11)", "660"),
    row("sporadic:M22:11", "M22", 11, "L_2(11)", "660"),
    row("sporadic:M23:23", "M23", 23, "23:11", "253"),
    row("sporadic:He:17", "He", 17, "Sp_4(4):2", "1958400"),
    row("sporadic:Ru:29", "Ru", 29, "L_2(29)", "12180"),
    row("sporadic:Co2:23", "Co2", 23, "M_23", "10200960"),
    row("sporadic:Co3:23", "Co3", 23, "M_23", "10200960"),
    row("sporadic:J1:19", "J1", 19, "19:6", "114"),
    row("sporadic:J3:3", "J3", 3, "3^2.3^{1+2}:8", "1944"),
    row("sporadic:Fi24':29", "Fi24'", 29, "29:14", "406"),
    row("sporadic:HN:19", "HN", 19, "U_3(8):3", "16547328"),
    row("sporadic:J4:29", "J4", 29, "29:28", "812"),
    row("sporadic:J4:43", "J4", 43, "43:14", "602"),
    row("sporadic:Ly:37", "Ly", 37, "37:18", "666"),
    row("sporadic:Ly:67", "Ly", 67, "67:22", "1474"),
    row("sporadic:B:47", "B", 47, "47:23", "1081"),
    SporadicRow {
        id: "sporadic:M:47",
        group: "M",
        r: 47,
        h: "2.B",
        order: None,
    },
    row("sporadic:M:59", "M", 59, "L_2(59)", "102660"),
    row("sporadic:M:71", "M", 71, "L_2(71)", "178920"),
];

pub(crate) fn rows_for(name: &str) -> impl Iterator<Item = &'static SporadicRow> + '_ {
    ROWS.iter().filter(move |row| row.group == name)
}

pub(crate) fn h_order(row: &SporadicRow) -> BigUint {
    match row.order {
        Some(o) => o.parse().expect("literal order"),
        None => {
            let b: BigUint = sporadic("B")
                .expect("B listed")
                .order
                .parse()
                .expect("literal order");
            b * 2u32
        }
    }
}

/// The single row function for sporadic socles; scans [`ROWS`] for the group.
pub(crate) fn lookup(c: &mut Ctx) -> Option<Fired> {
    let Family::Sporadic(name) = &c.s.family else {
        return None;
    };
    let name = name.clone();
    if name == "M" {
        c.caveat("maximal subgroups of the Monster completed by a recent classification");
    }
    if !c.outer("G = T", OuterFlag::Trivial) {
        return None;
    }
    for row in rows_for(&name) {
        if c.eq(&format!("r = {}", row.r), c.r, row.r) {
            return Some(Fired::new(row.id, row.h).order(h_order(row)));
        }
    }
    None
}
