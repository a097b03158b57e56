use crate::graph::{AuxGraph, FlowError, FlowState, Path};

/// Pushes `amount` units along `path` after checking it is a source-sink path
/// of active residual arcs, each with residual capacity at least `amount`.
pub fn augment_along(aux: &AuxGraph, state: &mut FlowState, path: &Path, amount: i64) -> Result<(), FlowError> {
    if amount < 1 {
        return Err(FlowError::InvalidAmount(amount));
    }
    let mut at = aux.source();
    for step in &path.steps {
        if step.from_node(aux) != at {
            return Err(FlowError::NotAnStPath);
        }
        if !state.is_active(aux, step.arc) {
            return Err(FlowError::InactiveArc { arc: step.arc });
        }
        let residual = state.residual(aux, *step);
        if residual < amount {
            return Err(FlowError::CapacityViolated {
                arc: step.arc,
                residual,
                amount,
            });
        }
        at = step.to_node(aux);
    }
    if path.is_empty() || at != aux.sink() {
        return Err(FlowError::NotAnStPath);
    }
    state.push_path(&path.steps, amount);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Arc, Instance, ResidualArc};

    fn setup() -> (AuxGraph, FlowState, Path) {
        let inst = Instance::new(2, vec![Arc::new(1, 2, 2, 4)], &[2, -2]).unwrap();
        let aux = AuxGraph::new(&inst);
        let state = FlowState::at_rung(&aux, 1);
        let path = Path {
            steps: vec![
                ResidualArc { arc: 1, forward: true },
                ResidualArc { arc: 0, forward: true },
                ResidualArc { arc: 2, forward: true },
            ],
        };
        (aux, state, path)
    }

    #[test]
    fn saturates_single_path() {
        let (aux, mut state, path) = setup();
        augment_along(&aux, &mut state, &path, 2).unwrap();
        assert_eq!(state.value(), 2);
        assert_eq!(state.flows(), &[2, 2, 2]);
        state.check(&aux).unwrap();
    }

    #[test]
    fn amounts_are_additive() {
        let (aux, mut state, path) = setup();
        augment_along(&aux, &mut state, &path, 1).unwrap();
        augment_along(&aux, &mut state, &path, 1).unwrap();
        assert_eq!(state.value(), 2);
        assert!(matches!(
            augment_along(&aux, &mut state, &path, 1),
            Err(FlowError::CapacityViolated { residual: 0, .. })
        ));
    }

    #[test]
    fn rejects_zero_amount_and_broken_paths() {
        let (aux, mut state, path) = setup();
        assert_eq!(augment_along(&aux, &mut state, &path, 0), Err(FlowError::InvalidAmount(0)));
        let partial = Path {
            steps: path.steps[..2].to_vec(),
        };
        assert_eq!(augment_along(&aux, &mut state, &partial, 1), Err(FlowError::NotAnStPath));
        assert_eq!(augment_along(&aux, &mut state, &Path::default(), 1), Err(FlowError::NotAnStPath));
        let mut inactive = FlowState::new(&aux);
        assert_eq!(
            augment_along(&aux, &mut inactive, &path, 1),
            Err(FlowError::InactiveArc { arc: 0 })
        );
        assert_eq!(state.value(), 0);
    }
}
