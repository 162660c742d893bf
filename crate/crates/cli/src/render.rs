//! Command bodies and their text, CSV and JSON renderings.

use mahonian::bijections::{
    enumerate_good_pairs, enumerate_marked_pairs, enumerate_signed_tuples, factor_few_inversions,
    m_block_factorization, phi, phi_fixed_points, psi, theta, theta_inverse, GoodPair,
};
use mahonian::compositions::{cut, Composition};
use mahonian::notation::{
    parse_composition, parse_good_pair, parse_marked_pair, parse_permutation,
    parse_signed_tuple,
};
use mahonian::numbers::{
    catalan_series, m_series, mahonian_table, r_series, subdiagonal_series, RMethod,
    SubdiagonalMethod,
};
use mahonian::perm::{
    enumerate_catalan_set_bounded, enumerate_with_inversions_bounded, PERMUTATION_BOUND,
};
use mahonian::verify::{Status, VerificationReport};
use mahonian::{Error, IntegerSeries};
use serde_json::{json, Value};

use crate::{Failure, Format, MapName, SetName};

pub const DEFAULT_SERIES_ORDER: usize = 20;

/// Rendered command output.
#[derive(Debug)]
pub struct Output(String);

impl Output {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn lines(items: impl IntoIterator<Item = String>) -> Output {
    let mut s = String::new();
    for item in items {
        s.push_str(&item);
        s.push('\n');
    }
    Output(s)
}

fn json_output(v: &Value) -> Output {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    Output(s)
}

fn csv_output(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Output {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    Output(String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input"))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values always serialize")
}

pub fn table(n_max: usize, format: Format) -> Output {
    let t = mahonian_table(n_max);
    let rows = t.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>());
    match format {
        Format::Text => lines(rows.map(|r| r.join(" "))),
        Format::Csv => lines(rows.map(|r| r.join(","))),
        Format::Json => json_output(&json!({ "n_max": n_max, "rows": rows.collect::<Vec<_>>() })),
    }
}

enum SeriesName {
    S(usize),
    R,
    M,
    C,
}

fn parse_series_name(name: &str, i: Option<usize>) -> Result<SeriesName, Failure> {
    let usage = |msg: String| Failure::Usage(msg);
    let subscript = name
        .strip_prefix('S')
        .map(|rest| rest.strip_prefix('_').unwrap_or(rest));
    match (name, subscript) {
        ("R", _) => Ok(SeriesName::R),
        ("M", _) => Ok(SeriesName::M),
        ("C", _) => Ok(SeriesName::C),
        (_, Some("")) => Ok(SeriesName::S(i.unwrap_or(0))),
        (_, Some(digits)) => {
            let from_name: usize = digits
                .parse()
                .map_err(|_| usage(format!("unknown series {name:?} (S_i, R, M, C)")))?;
            match i {
                Some(other) if other != from_name => {
                    Err(usage(format!("{name} conflicts with --i {other}")))
                }
                _ => Ok(SeriesName::S(from_name)),
            }
        }
        _ => Err(usage(format!("unknown series {name:?} (S_i, R, M, C)"))),
    }
}

pub fn series(
    name: &str,
    i: Option<usize>,
    method: Option<&str>,
    order: usize,
    format: Format,
) -> Result<Output, Failure> {
    let usage = |e: Error| Failure::Usage(e.to_string());
    let s: IntegerSeries = match parse_series_name(name, i)? {
        SeriesName::S(i) => {
            let m = method.map_or(Ok(SubdiagonalMethod::DiagonalOfDp), str::parse).map_err(usage)?;
            subdiagonal_series(i, order, m)
        }
        SeriesName::R => {
            let m = method.map_or(Ok(RMethod::Product), str::parse).map_err(usage)?;
            r_series(order, m)?
        }
        SeriesName::M | SeriesName::C if method.is_some() => {
            return Err(Failure::Usage(format!("series {name} takes no --method")));
        }
        SeriesName::M => m_series(order),
        SeriesName::C => catalan_series(order),
    };
    let coefficients = s.coefficients().iter().map(ToString::to_string);
    Ok(match format {
        Format::Text => lines([coefficients.collect::<Vec<_>>().join(",")]),
        Format::Csv => csv_output(
            &["n", "coefficient"],
            coefficients.enumerate().map(|(n, c)| vec![n.to_string(), c]),
        ),
        Format::Json => json_output(&to_json(&s)),
    })
}

pub fn report(report: &VerificationReport, format: Format) -> Output {
    match format {
        Format::Text => lines([report.to_string()]),
        Format::Json => json_output(&to_json(report)),
        Format::Csv => csv_output(
            &["name", "parameters", "status", "witness"],
            report.checks.iter().map(|c| {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                };
                vec![
                    c.name.clone(),
                    c.parameters.clone(),
                    status.to_string(),
                    c.witness.clone().unwrap_or_default(),
                ]
            }),
        ),
    }
}

/// An element in both notations.
struct Shown {
    text: String,
    json: Value,
}

impl Shown {
    fn of<T: std::fmt::Display + serde::Serialize>(v: &T) -> Self {
        Self {
            text: v.to_string(),
            json: to_json(v),
        }
    }
}

struct Applied {
    image: Shown,
    /// The inverse applied to the image, and whether it equals the input.
    round_trip: (Shown, bool),
}

fn blocks_text(blocks: &[Composition]) -> String {
    blocks.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
}

fn concat(blocks: &[Composition]) -> Composition {
    blocks
        .iter()
        .rev()
        .fold(Composition::empty(), |acc, b| acc.prepend(b.parts()))
}

fn apply_map(map: MapName, element: &str, i: usize) -> Result<Applied, Error> {
    Ok(match map {
        MapName::Phi => {
            let t = parse_signed_tuple(element)?;
            let image = phi(&t);
            let back = phi(&image);
            Applied {
                image: Shown::of(&image),
                round_trip: (Shown::of(&back), back == t),
            }
        }
        MapName::Psi => {
            let p = parse_marked_pair(element)?;
            let image = psi(&p);
            let back = psi(&image);
            Applied {
                image: Shown::of(&image),
                round_trip: (Shown::of(&back), back == p),
            }
        }
        MapName::Theta => {
            let p = parse_marked_pair(element)?;
            let image = theta(&p)?;
            let back = theta_inverse(&image)?;
            Applied {
                image: Shown::of(&image),
                round_trip: (Shown::of(&back), back == p),
            }
        }
        MapName::ThetaInverse => {
            let g: GoodPair = parse_good_pair(element)?;
            let image = theta_inverse(&g)?;
            let back = theta(&image)?;
            Applied {
                image: Shown::of(&image),
                round_trip: (Shown::of(&back), back == g),
            }
        }
        MapName::Factor => {
            let p = parse_permutation(element)?;
            let f = factor_few_inversions(&p, i)?;
            let back = f.recombine();
            Applied {
                image: Shown {
                    text: f.to_string(),
                    json: json!({ "sigma": to_json(&f.sigma), "tau": to_json(&f.tau) }),
                },
                round_trip: (Shown::of(&back), back == p),
            }
        }
        MapName::Mblocks => {
            let mu = parse_composition(element)?;
            let blocks = m_block_factorization(&mu)?;
            let back = concat(&blocks);
            Applied {
                image: Shown {
                    text: blocks_text(&blocks),
                    json: to_json(&blocks),
                },
                round_trip: (Shown::of(&back), back == mu),
            }
        }
        MapName::Cut => {
            let mu = parse_composition(element)?;
            let c = cut(&mu);
            let back = c.tail.prepend(&c.head.decreasing());
            Applied {
                image: Shown {
                    text: format!("{} | {}", c.head, c.tail),
                    json: json!({ "head": c.head.decreasing(), "tail": to_json(&c.tail) }),
                },
                round_trip: (Shown::of(&back), back == mu),
            }
        }
    })
}

pub fn apply(
    map: MapName,
    element: &str,
    twice: bool,
    i: usize,
    format: Format,
) -> Result<Output, Failure> {
    let applied = apply_map(map, element, i)?;
    let (back, matches) = &applied.round_trip;
    let out = match format {
        Format::Text | Format::Csv => {
            let mut v = vec![applied.image.text.clone()];
            if twice {
                v.push(format!("round trip: {}", back.text));
            }
            lines(v)
        }
        Format::Json => {
            let mut v = json!({ "image": applied.image.json });
            if twice {
                v["round_trip"] = back.json.clone();
                v["round_trip_matches"] = json!(matches);
            }
            json_output(&v)
        }
    };
    if twice && !matches {
        return Err(Failure::Verification(out));
    }
    Ok(out)
}

struct Listing {
    elements: Vec<Shown>,
    signs: Option<Vec<i64>>,
}

fn listing<T: std::fmt::Display + serde::Serialize>(
    items: &[T],
    sign: Option<fn(&T) -> i64>,
) -> Listing {
    Listing {
        elements: items.iter().map(Shown::of).collect(),
        signs: sign.map(|f| items.iter().map(f).collect()),
    }
}

fn check_bound(what: &'static str, n: usize, bound: Option<usize>) -> Result<(), Error> {
    match bound {
        Some(bound) if n > bound => Err(Error::BoundExceeded { what, n, bound }),
        _ => Ok(()),
    }
}

pub fn enumerate(
    set: SetName,
    n: usize,
    k: Option<usize>,
    bound: Option<usize>,
    format: Format,
) -> Result<Output, Failure> {
    if k.is_some() && set != SetName::Snk {
        return Err(Failure::Usage("only snk takes an inversion count k".into()));
    }
    let perm_bound = bound.unwrap_or(PERMUTATION_BOUND);
    let list = match set {
        SetName::Snk => {
            let k = k.ok_or_else(|| Failure::Usage("snk needs an inversion count k".into()))?;
            listing(&enumerate_with_inversions_bounded(n, k, perm_bound)?, None)
        }
        SetName::Cn => listing(&enumerate_catalan_set_bounded(n, perm_bound)?, None),
        SetName::Rn => {
            check_bound("enumerate rn", n, bound)?;
            listing(&enumerate_signed_tuples(n)?, Some(|t| t.sign()))
        }
        SetName::Tn => {
            check_bound("enumerate tn", n, bound)?;
            listing(&enumerate_marked_pairs(n)?, Some(|p| p.sign()))
        }
        SetName::Goodpairs => {
            check_bound("enumerate goodpairs", n, bound)?;
            listing(&enumerate_good_pairs(n)?, Some(GoodPair::sign))
        }
        SetName::Fixphi => {
            check_bound("enumerate fixphi", n, bound)?;
            listing(&phi_fixed_points(n)?, None)
        }
    };
    let count = list.elements.len();
    let signed_sum: Option<i64> = list.signs.as_ref().map(|s| s.iter().sum());
    Ok(match format {
        Format::Text => {
            let mut v: Vec<String> = list.elements.iter().map(|e| e.text.clone()).collect();
            v.push(format!("count: {count}"));
            if let Some(s) = signed_sum {
                v.push(format!("signed sum: {s}"));
            }
            lines(v)
        }
        Format::Csv => match &list.signs {
            Some(signs) => csv_output(
                &["element", "sign"],
                list.elements
                    .iter()
                    .zip(signs)
                    .map(|(e, s)| vec![e.text.clone(), s.to_string()]),
            ),
            None => csv_output(&["element"], list.elements.iter().map(|e| vec![e.text.clone()])),
        },
        Format::Json => {
            let mut v = json!({
                "set": format!("{set:?}").to_lowercase(),
                "n": n,
                "count": count,
                "elements": list.elements.iter().map(|e| e.json.clone()).collect::<Vec<_>>(),
            });
            if let Some(k) = k {
                v["k"] = json!(k);
            }
            if let Some(s) = signed_sum {
                v["signed_sum"] = json!(s);
            }
            json_output(&v)
        }
    })
}
