//! Strata of translation surfaces and their connected components.
//!
//! A stratum `H(d_1, ..., d_m)` collects the translation surfaces whose cone
//! points have orders `d_i >= 1` with `sum d_i = 2g - 2`. Key facts encoded
//! here:
//!
//! - complex dimension `2g + m - 1`;
//! - for genus `g >= 4`, the connected components are classified by two
//!   invariants (Kontsevich-Zorich): a hyperelliptic component exists exactly
//!   for the shapes `(2g-2)` and `(g-1, g-1)`, and the remaining surfaces form
//!   a single component when some order is odd or split by spin parity when
//!   all orders are even;
//! - degenerate (boundary) strata may be disconnected and may carry marked
//!   points of order 0; their dimension is the sum over components.
//!
//! Orders are stored sorted descending, so equality, hashing, and the wire
//! format are canonical.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors for stratum parsing, construction, and classification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StratumError {
    /// The input string does not match the stratum grammar.
    #[error("malformed stratum `{0}`: expected `H(d1,...,dm)` or `d1,...,dm` with positive integers")]
    ParseError(String),
    /// Structurally parseable, but the orders violate an invariant.
    #[error("invalid orders: {0}")]
    InvalidOrders(String),
    /// Component classification is only defined here for genus >= 4 (and
    /// feasibility analysis for genus >= 5); smaller genus needs external
    /// tables that this crate deliberately does not guess.
    #[error("unsupported genus {genus}: {operation} requires genus >= {min_genus}")]
    UnsupportedGenus {
        genus: u32,
        min_genus: u32,
        operation: &'static str,
    },
}

/// A stratum `H(d_1, ..., d_m)` of translation surfaces, orders sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Stratum {
    orders: Vec<u32>,
    genus: u32,
}

impl Stratum {
    /// Builds a stratum from cone-point orders (any order; canonicalized).
    ///
    /// Rejects empty lists, zero orders, and odd total order. The genus is
    /// derived from `sum = 2g - 2`, so it is always at least 2 here.
    pub fn new(mut orders: Vec<u32>) -> Result<Self, StratumError> {
        if orders.is_empty() {
            return Err(StratumError::InvalidOrders(
                "a stratum needs at least one cone point".into(),
            ));
        }
        if orders.contains(&0) {
            return Err(StratumError::InvalidOrders(
                "cone-point orders must be >= 1 (order 0 belongs to boundary strata only)".into(),
            ));
        }
        let sum: u64 = orders.iter().map(|&d| u64::from(d)).sum();
        if sum % 2 != 0 {
            return Err(StratumError::InvalidOrders(format!(
                "orders sum to {sum}, which is odd; the total must equal 2g - 2"
            )));
        }
        let genus = u32::try_from(sum / 2 + 1).map_err(|_| {
            StratumError::InvalidOrders("total order too large to represent".into())
        })?;
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Stratum { orders, genus })
    }

    /// Cone-point orders, sorted descending.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Genus of the surfaces in this stratum.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of cone points `m`.
    pub fn num_zeros(&self) -> u32 {
        self.orders.len() as u32
    }

    /// Complex dimension `2g + m - 1`.
    pub fn dim_complex(&self) -> u32 {
        2 * self.genus + self.num_zeros() - 1
    }

    /// True when every cone-point order is even (the spin-parity regime).
    pub fn all_orders_even(&self) -> bool {
        self.orders.iter().all(|d| d % 2 == 0)
    }

    /// Connected components of this stratum for genus at least 4.
    ///
    /// Returns the set of labels, never empty:
    /// - `Hyperelliptic` is present exactly for the shapes `(2g-2)` and
    ///   `(g-1, g-1)`;
    /// - if some order is odd, the non-hyperelliptic surfaces form one
    ///   component (`NonHyperelliptic`);
    /// - if all orders are even, they split into `EvenSpin` and `OddSpin`.
    ///
    /// Genus 2 and 3 have exceptional component tables that are out of scope;
    /// asking for them is an explicit error rather than a guess.
    pub fn classify_components(&self) -> Result<BTreeSet<ComponentLabel>, StratumError> {
        if self.genus < 4 {
            return Err(StratumError::UnsupportedGenus {
                genus: self.genus,
                min_genus: 4,
                operation: "component classification",
            });
        }
        let mut labels = BTreeSet::new();
        if self.is_hyperelliptic_shape() {
            labels.insert(ComponentLabel::Hyperelliptic);
        }
        if self.all_orders_even() {
            labels.insert(ComponentLabel::EvenSpin);
            labels.insert(ComponentLabel::OddSpin);
        } else {
            labels.insert(ComponentLabel::NonHyperelliptic);
        }
        Ok(labels)
    }

    /// True for the shapes `(2g-2)` and `(g-1, g-1)` that carry a
    /// hyperelliptic component.
    pub fn is_hyperelliptic_shape(&self) -> bool {
        let g = self.genus;
        match self.orders.as_slice() {
            [d] => *d == 2 * g - 2,
            [d1, d2] => *d1 == g - 1 && *d2 == g - 1,
            _ => false,
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(")?;
        for (i, d) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Stratum {
    type Err = StratumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_stratum(s)
    }
}

/// Parses `H(d1,...,dm)` or a bare comma list `d1,...,dm`.
///
/// Whitespace around entries is tolerated. Non-numeric entries are
/// [`StratumError::ParseError`]; structurally valid but inadmissible orders
/// (zero, negative sign, odd total) are [`StratumError::InvalidOrders`].
pub fn parse_stratum(text: &str) -> Result<Stratum, StratumError> {
    let trimmed = text.trim();
    let body = match trimmed.strip_prefix("H(") {
        Some(rest) => rest
            .strip_suffix(')')
            .ok_or_else(|| StratumError::ParseError(text.to_owned()))?,
        None => trimmed,
    };
    if body.trim().is_empty() {
        return Err(StratumError::ParseError(text.to_owned()));
    }
    let mut orders = Vec::new();
    for entry in body.split(',') {
        let entry = entry.trim();
        if entry.starts_with('-') {
            return Err(StratumError::InvalidOrders(format!(
                "order `{entry}` is not positive"
            )));
        }
        let d: u32 = entry
            .parse()
            .map_err(|_| StratumError::ParseError(text.to_owned()))?;
        orders.push(d);
    }
    Stratum::new(orders)
}

impl Serialize for Stratum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            orders: &'a [u32],
            genus: u32,
            dim: u32,
        }
        Wire {
            orders: &self.orders,
            genus: self.genus,
            dim: self.dim_complex(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Stratum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            orders: Vec<u32>,
            #[serde(default)]
            genus: Option<u32>,
            #[serde(default)]
            dim: Option<u32>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let stratum = Stratum::new(wire.orders).map_err(D::Error::custom)?;
        if let Some(g) = wire.genus {
            if g != stratum.genus() {
                return Err(D::Error::custom(format!(
                    "genus {} inconsistent with orders (expected {})",
                    g,
                    stratum.genus()
                )));
            }
        }
        if let Some(d) = wire.dim {
            if d != stratum.dim_complex() {
                return Err(D::Error::custom(format!(
                    "dim {} inconsistent with orders (expected {})",
                    d,
                    stratum.dim_complex()
                )));
            }
        }
        Ok(stratum)
    }
}

/// Label of a connected component of a stratum.
///
/// `Connected` is reserved for strata known to form a single component; the
/// genus >= 4 classification never emits it (single components there are
/// reported as `NonHyperelliptic`).
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum ComponentLabel {
    Hyperelliptic,
    EvenSpin,
    OddSpin,
    NonHyperelliptic,
    Connected,
}

impl ComponentLabel {
    /// All labels, in canonical order.
    pub const ALL: [ComponentLabel; 5] = [
        ComponentLabel::Hyperelliptic,
        ComponentLabel::EvenSpin,
        ComponentLabel::OddSpin,
        ComponentLabel::NonHyperelliptic,
        ComponentLabel::Connected,
    ];

    /// Canonical name, matching the serialized form.
    pub fn name(self) -> &'static str {
        match self {
            ComponentLabel::Hyperelliptic => "Hyperelliptic",
            ComponentLabel::EvenSpin => "EvenSpin",
            ComponentLabel::OddSpin => "OddSpin",
            ComponentLabel::NonHyperelliptic => "NonHyperelliptic",
            ComponentLabel::Connected => "Connected",
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComponentLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s.to_ascii_lowercase().replace(['-', '_'], "");
        ComponentLabel::ALL
            .into_iter()
            .find(|l| l.name().to_ascii_lowercase() == lowered)
            .ok_or_else(|| format!("unknown component label `{s}`"))
    }
}

/// One connected piece of a degenerate surface: genus and cone-point orders,
/// marked points of order 0 allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryComponent {
    genus: u32,
    orders: Vec<u32>,
}

impl BoundaryComponent {
    /// Builds a component, checking `sum(orders) = 2g - 2` with `g >= 1`.
    pub fn new(genus: u32, mut orders: Vec<u32>) -> Result<Self, StratumError> {
        if genus == 0 {
            return Err(StratumError::InvalidOrders(
                "boundary components have genus >= 1".into(),
            ));
        }
        let sum: u64 = orders.iter().map(|&d| u64::from(d)).sum();
        if sum != u64::from(2 * genus - 2) {
            return Err(StratumError::InvalidOrders(format!(
                "component orders sum to {sum}, expected 2g - 2 = {}",
                2 * genus - 2
            )));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BoundaryComponent { genus, orders })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Orders including marked points of order 0, sorted descending.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of cone points and marked points on this component.
    pub fn num_points(&self) -> u32 {
        self.orders.len() as u32
    }

    /// Complex dimension `2g_i + m_i - 1` of this component's stratum.
    pub fn dim_complex(&self) -> u32 {
        2 * self.genus + self.num_points() - 1
    }
}

/// A possibly disconnected degenerate stratum; its dimension `n` is the sum of
/// the component dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryStratum {
    components: Vec<BoundaryComponent>,
}

impl BoundaryStratum {
    /// Builds a boundary stratum from its components (at least one).
    pub fn new(components: Vec<BoundaryComponent>) -> Result<Self, StratumError> {
        if components.is_empty() {
            return Err(StratumError::InvalidOrders(
                "a boundary stratum needs at least one component".into(),
            ));
        }
        Ok(BoundaryStratum { components })
    }

    pub fn components(&self) -> &[BoundaryComponent] {
        &self.components
    }

    /// Total complex dimension `n = sum(2g_i + m_i - 1)`.
    pub fn dim_complex(&self) -> u32 {
        self.components.iter().map(BoundaryComponent::dim_complex).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stratum(orders: &[u32]) -> Stratum {
        Stratum::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn parse_both_grammars() {
        let s = parse_stratum("H(2,2,2)").unwrap();
        assert_eq!(s.orders(), &[2, 2, 2]);
        assert_eq!(s.genus(), 4);
        assert_eq!(s.dim_complex(), 10);

        let s = parse_stratum("1,1").unwrap();
        assert_eq!(s.orders(), &[1, 1]);
        assert_eq!(s.genus(), 2);
        assert_eq!(s.dim_complex(), 5);
    }

    #[test]
    fn parse_rejects_odd_total_and_zero() {
        assert!(matches!(
            parse_stratum("H(3)"),
            Err(StratumError::InvalidOrders(_))
        ));
        assert!(matches!(
            parse_stratum("2,0"),
            Err(StratumError::InvalidOrders(_))
        ));
        assert!(matches!(
            parse_stratum("-2,4"),
            Err(StratumError::InvalidOrders(_))
        ));
    }

    #[test]
    fn parse_rejects_malformed() {
        for text in ["H(2,2", "H()", "", "H(a)", "2;2", "H(2,,2)"] {
            assert!(
                matches!(parse_stratum(text), Err(StratumError::ParseError(_))),
                "{text:?} should be a parse error"
            );
        }
    }

    #[test]
    fn display_is_canonical_and_round_trips() {
        let s = Stratum::new(vec![1, 3, 2]).unwrap();
        assert_eq!(s.to_string(), "H(3,2,1)");
        assert_eq!(parse_stratum(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn genus_sum_invariant_holds_for_constructed() {
        for orders in [vec![2], vec![1, 1], vec![4, 2], vec![3, 3, 2]] {
            let s = Stratum::new(orders).unwrap();
            let sum: u32 = s.orders().iter().sum();
            assert_eq!(sum, 2 * s.genus() - 2);
        }
    }

    #[test]
    fn dim_examples() {
        assert_eq!(stratum(&[2]).dim_complex(), 4);
        assert_eq!(stratum(&[1, 1]).dim_complex(), 5);
        // (2,...,2) with g-1 twos has dimension 3g-2.
        for g in 2..=12u32 {
            let s = stratum(&vec![2; (g - 1) as usize]);
            assert_eq!(s.genus(), g);
            assert_eq!(s.dim_complex(), 3 * g - 2);
        }
    }

    #[test]
    fn classification_worked_examples() {
        use ComponentLabel::*;
        let h6 = stratum(&[6]).classify_components().unwrap();
        assert_eq!(
            h6.into_iter().collect::<Vec<_>>(),
            vec![Hyperelliptic, EvenSpin, OddSpin]
        );
        let h33 = stratum(&[3, 3]).classify_components().unwrap();
        assert_eq!(
            h33.into_iter().collect::<Vec<_>>(),
            vec![Hyperelliptic, NonHyperelliptic]
        );
        let h222 = stratum(&[2, 2, 2]).classify_components().unwrap();
        assert_eq!(h222.into_iter().collect::<Vec<_>>(), vec![EvenSpin, OddSpin]);
    }

    #[test]
    fn classification_rejects_small_genus() {
        assert!(matches!(
            stratum(&[2]).classify_components(),
            Err(StratumError::UnsupportedGenus { genus: 2, .. })
        ));
        assert!(matches!(
            stratum(&[4]).classify_components(),
            Err(StratumError::UnsupportedGenus { genus: 3, .. })
        ));
    }

    #[test]
    fn classification_set_sizes() {
        for orders in [
            vec![8],
            vec![4, 4],
            vec![6, 2],
            vec![5, 3],
            vec![7, 1],
            vec![2, 2, 2, 2],
            vec![3, 3, 1, 1],
            vec![6, 1, 1],
        ] {
            let s = Stratum::new(orders).unwrap();
            let labels = s.classify_components().unwrap();
            assert!((1..=3).contains(&labels.len()), "{s}: {labels:?}");
            if labels.len() == 3 {
                assert!(s.is_hyperelliptic_shape() && s.all_orders_even(), "{s}");
            }
        }
    }

    #[test]
    fn json_schema_round_trip() {
        let s = stratum(&[2, 2, 2]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"orders":[2,2,2],"genus":4,"dim":10}"#);
        let back: Stratum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        // Inconsistent derived fields are rejected.
        assert!(serde_json::from_str::<Stratum>(r#"{"orders":[2],"genus":3,"dim":4}"#).is_err());
        // Orders alone suffice.
        let lean: Stratum = serde_json::from_str(r#"{"orders":[4,2]}"#).unwrap();
        assert_eq!(lean, stratum(&[4, 2]));
    }

    #[test]
    fn component_label_round_trip() {
        for label in ComponentLabel::ALL {
            assert_eq!(label.name().parse::<ComponentLabel>().unwrap(), label);
        }
        assert_eq!(
            "even-spin".parse::<ComponentLabel>().unwrap(),
            ComponentLabel::EvenSpin
        );
        assert!("spin".parse::<ComponentLabel>().is_err());
    }

    #[test]
    fn boundary_components_allow_marked_points() {
        let c = BoundaryComponent::new(1, vec![0]).unwrap();
        assert_eq!(c.dim_complex(), 2);
        let c = BoundaryComponent::new(1, vec![0, 0]).unwrap();
        assert_eq!(c.dim_complex(), 3);
        assert!(BoundaryComponent::new(1, vec![1]).is_err());
        assert!(BoundaryComponent::new(0, vec![0]).is_err());

        let b = BoundaryStratum::new(vec![
            BoundaryComponent::new(1, vec![0]).unwrap(),
            BoundaryComponent::new(2, vec![1, 1, 0]).unwrap(),
        ])
        .unwrap();
        assert_eq!(b.dim_complex(), 2 + (4 + 3 - 1));
    }
}
