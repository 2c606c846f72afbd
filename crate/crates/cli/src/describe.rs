use serde_json::{json, Value};

use semiperm::classes::{group_class, ClassKind, VerdictSummary};
use semiperm::lattice::{chief_series, named};
use semiperm::{Subgroup, SubgroupLattice};

/// Generators of `h` in cycle notation.
pub fn gens(h: &Subgroup) -> Vec<String> {
    let g = h.parent();
    h.generators().iter().map(|&e| g.element(e).to_string()).collect()
}

fn sub(lat: &SubgroupLattice, h: &Subgroup) -> Value {
    json!({ "index": lat.id(h), "order": h.order(), "generators": gens(h) })
}

/// Structural summary of a group as a JSON document.
pub fn describe(id: &str, lat: &SubgroupLattice) -> Value {
    let g = lat.group();
    let whole = lat.whole();
    let series = chief_series(lat, &[]).expect("no terms to validate");
    let factors: Vec<Value> = series
        .factors
        .iter()
        .map(|f| json!({ "order": f.order, "cyclic": f.is_cyclic }))
        .collect();
    let normals: Vec<Value> = lat.normal_subgroups().map(|h| sub(lat, h)).collect();
    let mut kinds = vec![
        ClassKind::Cyclic,
        ClassKind::Nilpotent,
        ClassKind::Supersoluble,
        ClassKind::Soluble,
        ClassKind::Quasinilpotent,
    ];
    for &p in g.primes() {
        kinds.extend([
            ClassKind::PNilpotent(p),
            ClassKind::PSupersoluble(p),
            ClassKind::PSoluble(p),
            ClassKind::StrictlyPClosed(p),
        ]);
    }
    let classes: Vec<VerdictSummary> = kinds.into_iter().map(|k| (&group_class(lat, k)).into()).collect();
    json!({
        "id": id,
        "degree": g.degree(),
        "order": g.order(),
        "primes": g.primes(),
        "subgroups": lat.len(),
        "conjugacy_classes": lat.classes().len(),
        "census": lat.census(),
        "simple": g.order() > 1 && lat.normal().len() == 2,
        "normal_subgroups": normals,
        "chief_factors": factors,
        "fitting": sub(lat, &named::fitting(lat, whole)),
        "generalized_fitting": sub(lat, &named::generalized_fitting(lat, whole)),
        "frattini": sub(lat, &named::frattini(lat, whole)),
        "center": sub(lat, &named::center(whole)),
        "hypercenter": sub(lat, &named::hypercenter(whole)),
        "classes": classes,
    })
}

/// One JSON record per subgroup.
pub fn subgroups(lat: &SubgroupLattice) -> Vec<Value> {
    (0..lat.len())
        .map(|i| {
            let h = lat.get(i);
            json!({
                "index": i,
                "order": h.order(),
                "class": lat.class_of(i),
                "normal": lat.is_normal(i),
                "generators": gens(h),
            })
        })
        .collect()
}
