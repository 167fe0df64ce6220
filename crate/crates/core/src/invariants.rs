use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{DistanceMatrix, Graph};

/// Per-vertex eccentricity, normality and lambda-span of a connected graph,
/// together with the derived vertex sets and aggregate sums.
///
/// Conventions for `n = 1`: eccentricity and normality are 0 and the single
/// vertex is simultaneously peripheral and central.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub ecc: Vec<u32>,
    pub norm: Vec<u32>,
    pub lambda: Vec<u32>,
    pub periphery: Vec<usize>,
    pub center: Vec<usize>,
    pub normality_center: Vec<usize>,
    pub diameter: u32,
    pub radius: u32,
    pub ecc_sum: i64,
    pub norm_sum: i64,
    pub lambda_sum: i64,
}

/// Computes the full invariant profile from one shared distance matrix.
pub fn profile(g: &Graph) -> Result<InvariantProfile, GraphError> {
    let m = DistanceMatrix::of(g)?;
    Ok(profile_from_matrix(&m))
}

fn profile_from_matrix(m: &DistanceMatrix) -> InvariantProfile {
    let n = m.order();
    let ecc: Vec<u32> = (0..n)
        .map(|v| m.row(v).iter().copied().max().unwrap())
        .collect();
    let diameter = *ecc.iter().max().unwrap();
    let radius = *ecc.iter().min().unwrap();
    let periphery: Vec<usize> = (0..n).filter(|&v| ecc[v] == diameter).collect();
    let center: Vec<usize> = (0..n).filter(|&v| ecc[v] == radius).collect();
    let norm: Vec<u32> = (0..n)
        .map(|v| periphery.iter().map(|&p| m.get(v, p)).min().unwrap())
        .collect();
    let max_norm = *norm.iter().max().unwrap();
    let normality_center: Vec<usize> = (0..n).filter(|&v| norm[v] == max_norm).collect();
    let lambda: Vec<u32> = (0..n).map(|v| ecc[v] - norm[v]).collect();
    InvariantProfile {
        n,
        ecc_sum: ecc.iter().map(|&x| x as i64).sum(),
        norm_sum: norm.iter().map(|&x| x as i64).sum(),
        lambda_sum: lambda.iter().map(|&x| x as i64).sum(),
        ecc,
        norm,
        lambda,
        periphery,
        center,
        normality_center,
        diameter,
        radius,
    }
}

/// For each vertex, the largest distance to a peripheral vertex.
///
/// On trees this equals the eccentricity pointwise; on general connected
/// graphs it can be strictly smaller, which is why it is exposed separately.
pub fn ecc_via_periphery(g: &Graph) -> Result<Vec<u32>, GraphError> {
    let m = DistanceMatrix::of(g)?;
    let p = profile_from_matrix(&m);
    Ok((0..p.n)
        .map(|v| p.periphery.iter().map(|&u| m.get(v, u)).max().unwrap())
        .collect())
}

/// Checks that one diametral pair `(u, w)` found by double BFS realizes every
/// eccentricity: `ecc(v) = max(d(v,u), d(v,w))` for all `v`.
pub fn check_two_endpoint_property(t: &Graph) -> Result<bool, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    let m = DistanceMatrix::of(t)?;
    let n = t.order();
    let argmax = |row: &[u32]| {
        row.iter()
            .enumerate()
            .max_by_key(|&(i, &d)| (d, std::cmp::Reverse(i)))
            .map(|(i, _)| i)
            .unwrap()
    };
    let u = argmax(m.row(0));
    let w = argmax(m.row(u));
    Ok((0..n).all(|v| {
        let ecc = m.row(v).iter().copied().max().unwrap();
        ecc == m.get(v, u).max(m.get(v, w))
    }))
}

/// Verifies the location of lambda extremes on a tree: the maximum is
/// attained exactly on the periphery, the center is contained in the argmin,
/// and the minimum is 0 for even diameter and 1 for odd.
pub fn lambda_location_check(t: &Graph) -> Result<bool, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    let p = profile(t)?;
    let max_lambda = *p.lambda.iter().max().unwrap();
    let min_lambda = *p.lambda.iter().min().unwrap();
    let argmax: Vec<usize> = (0..p.n).filter(|&v| p.lambda[v] == max_lambda).collect();
    let center_in_argmin = p.center.iter().all(|&v| p.lambda[v] == min_lambda);
    Ok(argmax == p.periphery && center_in_argmin && min_lambda == p.diameter % 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fixture, path, star, t_hat, FixtureId};
    use crate::graph::Graph;

    #[test]
    fn fig2_profiles() {
        let t = fixture(FixtureId::Fig2Tree).unwrap();
        let p = profile(&t).unwrap();
        assert_eq!(p.periphery, vec![0, 3, 4]);
        assert_eq!(p.norm_sum, 2);

        let g = fixture(FixtureId::Fig2PlusEdge).unwrap();
        let p = profile(&g).unwrap();
        assert_eq!(p.periphery, vec![0, 3]);
        assert_eq!(p.norm_sum, 3);
    }

    #[test]
    fn fig3_profile() {
        let t = fixture(FixtureId::Fig3).unwrap();
        let p = profile(&t).unwrap();
        assert_eq!(p.periphery, vec![0, 1, 2, 3]);
        assert_eq!(p.normality_center, vec![4, 5, 6, 7]);
        assert_eq!(p.center, vec![8, 9]);
    }

    #[test]
    fn single_vertex_conventions() {
        let g = Graph::from_edges(1, []).unwrap();
        let p = profile(&g).unwrap();
        assert_eq!(p.ecc, vec![0]);
        assert_eq!(p.norm, vec![0]);
        assert_eq!(p.periphery, vec![0]);
        assert_eq!(p.center, vec![0]);
        assert_eq!(ecc_via_periphery(&g).unwrap(), vec![0]);
    }

    #[test]
    fn periphery_distance_undershoots_on_fig1() {
        let g = fixture(FixtureId::Fig1).unwrap();
        let p = profile(&g).unwrap();
        let via = ecc_via_periphery(&g).unwrap();
        assert_eq!(p.ecc[2], 3);
        assert_eq!(via[2], 2); // the tree equivalence fails on general graphs
    }

    #[test]
    fn two_endpoint_property_small() {
        assert!(check_two_endpoint_property(&path(5).unwrap()).unwrap());
        assert!(check_two_endpoint_property(&star(6).unwrap()).unwrap());
        assert!(check_two_endpoint_property(&fixture(FixtureId::Fig2Tree).unwrap()).unwrap());
        assert!(check_two_endpoint_property(&fixture(FixtureId::Fig1).unwrap()).is_err());
    }

    #[test]
    fn lambda_locations() {
        // path(5): ends maximize, middle attains 0
        let p = profile(&path(5).unwrap()).unwrap();
        assert_eq!(p.lambda, vec![4, 2, 0, 2, 4]);
        assert!(lambda_location_check(&path(5).unwrap()).unwrap());

        // odd diameter: minimum is 1
        let p = profile(&path(6).unwrap()).unwrap();
        assert_eq!(*p.lambda.iter().min().unwrap(), 1);
        assert!(lambda_location_check(&path(6).unwrap()).unwrap());
    }

    #[test]
    fn comet_vertices_also_minimize_lambda() {
        let t = t_hat(10, 6).unwrap();
        let p = profile(&t).unwrap();
        let argmin: Vec<usize> = (0..10).filter(|&v| p.lambda[v] == 0).collect();
        // center vertex 3 plus the whole attached comet 7, 8, 9
        assert_eq!(argmin, vec![3, 7, 8, 9]);
        assert!(lambda_location_check(&t).unwrap());
    }

    #[test]
    fn norm_sum_zero_iff_all_peripheral() {
        // complete graph and cycle: every vertex peripheral, norm sum zero
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = profile(&k4).unwrap();
        assert_eq!(p.norm_sum, 0);
        assert_eq!(p.periphery.len(), 4);

        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p = profile(&c5).unwrap();
        assert_eq!(p.norm_sum, 0);
        assert_eq!(p.periphery.len(), 5);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(profile(&g).unwrap_err(), GraphError::Disconnected);
        assert_eq!(ecc_via_periphery(&g).unwrap_err(), GraphError::Disconnected);
    }
}
