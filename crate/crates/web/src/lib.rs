//! wasm-bindgen entry points for `www/index.html`.
//!
//! Each export takes the text of a quiver or tiling file and returns a plain
//! text report. The `*_report` functions do the work and are testable on
//! the host.

use gentle::algebra::GentlePresentation;
use gentle::arcs::{ArcEnd, ArcModel, Curve, TauInverse};
use gentle::format::QuiverFile;
use gentle::homs::{hom_dim, Host};
use gentle::strings::{detect_band, enumerate_strings, parse_string, Band};
use gentle::surface::{tiling_algebra, Tiling};
use wasm_bindgen::prelude::*;

fn presentation(text: &str) -> Result<GentlePresentation, String> {
    if text.trim_start().starts_with("tiling") {
        let t = Tiling::parse(text).map_err(|e| e.to_string())?;
        return Ok(tiling_algebra(&t).map_err(|e| e.to_string())?.presentation);
    }
    let f = QuiverFile::parse(text).map_err(|e| e.to_string())?;
    let report = f.report().map_err(|e| e.to_string())?;
    if !report.is_gentle() {
        return Err(format!("not gentle: {report}"));
    }
    f.presentation().map_err(|e| e.to_string())
}

/// Gentleness, representation type and the strings up to `max_len`.
pub fn strings_report(text: &str, max_len: usize) -> Result<String, String> {
    let p = presentation(text)?;
    let q = p.quiver();
    let mut out = vec!["gentle".to_string()];
    out.push(match detect_band(&p) {
        None => "finite".into(),
        Some(b) => format!("infinite; band: {}", b.text(q)),
    });
    let strings = enumerate_strings(&p, Some(max_len)).map_err(|e| e.to_string())?;
    out.push(format!("{} strings of length <= {max_len}", strings.len()));
    out.extend(strings.iter().map(|w| w.text(q)));
    Ok(out.join("\n"))
}

fn host(p: &GentlePresentation, text: &str) -> Result<Host, String> {
    match text.trim().strip_prefix("band ") {
        Some(letters) => {
            let w = parse_string(p, letters).map_err(|e| e.to_string())?;
            Ok(Host::Band(
                Band::new(p, w.letters()).map_err(|e| e.to_string())?,
            ))
        }
        None => Ok(Host::String(
            parse_string(p, text).map_err(|e| e.to_string())?,
        )),
    }
}

/// `dim Hom(M(v), M(w))` with its admissible pairs.
pub fn hom_report(text: &str, v: &str, w: &str) -> Result<String, String> {
    let p = presentation(text)?;
    let q = p.quiver();
    let h = hom_dim(&p, &host(&p, v)?, &host(&p, w)?);
    let mut out = vec![format!("dim {}", h.dim)];
    for pair in &h.pairs {
        out.push(format!("{} | {}", pair.factor.text(q), pair.sub.text(q)));
    }
    Ok(out.join("\n"))
}

/// The arc of a string, its two pivots and its rotation.
pub fn arc_report(text: &str, string: &str) -> Result<String, String> {
    let t = Tiling::parse(text).map_err(|e| e.to_string())?;
    let m = ArcModel::new(&t).map_err(|e| e.to_string())?;
    let q = m.presentation().quiver();
    let w = parse_string(m.presentation(), string).map_err(|e| e.to_string())?;
    let a = m.string_to_arc(&w).map_err(|e| e.to_string())?;
    let mut out = vec![
        format!("arc {}", m.arc_text(&a)),
        format!(
            "intersection {:?}",
            m.intersection_vector(&Curve::Arc(a.clone())).counts
        ),
    ];
    for (name, end) in [("s", ArcEnd::Start), ("t", ArcEnd::End)] {
        let pv = m.pivot(&a, end).map_err(|e| e.to_string())?;
        out.push(format!(
            "pivot {name}: {} ({:?})",
            pv.string.text(q),
            pv.case
        ));
    }
    out.push(match m.tau_inverse_arc(&a).map_err(|e| e.to_string())? {
        TauInverse::Injective => "tau inverse: injective".into(),
        TauInverse::Arc { string, .. } => format!("tau inverse: {}", string.text(q)),
    });
    Ok(out.join("\n"))
}

#[wasm_bindgen]
pub fn strings(text: &str, max_len: usize) -> Result<String, JsValue> {
    strings_report(text, max_len).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hom(text: &str, v: &str, w: &str) -> Result<String, JsValue> {
    hom_report(text, v, w).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn arc(text: &str, string: &str) -> Result<String, JsValue> {
    arc_report(text, string).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gentle::fixtures;

    const FIX_A_TEXT: &str = "quiver\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 1\narrow c 2 3\narrow d 3 3\nrelation a b\nrelation b a\nrelation d d\nend\n";

    #[test]
    fn hom_of_fix_a() {
        let r = hom_report(FIX_A_TEXT, "b- c d c- b", "b- c d c- b").unwrap();
        assert!(r.starts_with("dim 2\n"), "{r}");
    }

    #[test]
    fn strings_of_a_tiling() {
        let r = strings_report(fixtures::KRON, 2).unwrap();
        assert!(r.starts_with("gentle\ninfinite; band:"), "{r}");
    }

    #[test]
    fn arc_of_pent() {
        let r = arc_report(fixtures::PENT, "x>y@p1").unwrap();
        assert!(r.contains("intersection [1, 1]"), "{r}");
        assert!(r.contains("pivot s: zero (Cohook)"), "{r}");
    }

    #[test]
    fn errors_are_text() {
        assert!(hom_report(
            "quiver\nvertex 1\narrow d 1 1\nend\n",
            "triv 1 +",
            "triv 1 +"
        )
        .unwrap_err()
        .starts_with("not gentle"));
    }
}
