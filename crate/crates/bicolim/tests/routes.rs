mod common;

use common::{
    cat_instances, cat_targets, env, tensor_instances, tensor_targets, verify_cat_instance,
    verify_cat_instance_staged, verify_tensor_instance, verify_tensor_instance_staged,
};

const LIMIT: usize = 5000;

#[test]
fn cat_suite_passes_against_all_targets() {
    for inst in cat_instances() {
        let e = env(inst.text);
        for (tname, t) in cat_targets() {
            let r = verify_cat_instance(&inst, &e, &t, LIMIT)
                .unwrap_or_else(|err| panic!("{} vs {tname}: {err}", inst.label));
            assert!(
                r.passed(),
                "{} vs {tname}: {:?}",
                inst.label,
                r.failure
            );
            assert_eq!(r.unknown_incidents, 0, "{} vs {tname}", inst.label);
        }
    }
}

#[test]
fn cat_staged_route_agrees_with_direct() {
    for inst in cat_instances() {
        let e = env(inst.text);
        for (tname, t) in cat_targets() {
            if let Some(r) = verify_cat_instance_staged(&inst, &e, &t, LIMIT)
                .unwrap_or_else(|err| panic!("{} vs {tname}: {err}", inst.label))
            {
                assert!(
                    r.passed(),
                    "staged {} vs {tname}: {:?}",
                    inst.label,
                    r.failure
                );
            }
        }
    }
}

#[test]
fn tensor_suite_passes_against_all_targets() {
    for inst in tensor_instances() {
        let e = env(inst.text);
        for (tname, t) in tensor_targets() {
            let r = verify_tensor_instance(&inst, &e, &t, LIMIT)
                .unwrap_or_else(|err| panic!("{} vs {tname}: {err}", inst.label));
            assert!(
                r.passed(),
                "{} vs {tname}: {:?}",
                inst.label,
                r.failure
            );
            assert_eq!(r.unknown_incidents, 0, "{} vs {tname}", inst.label);
        }
    }
}

#[test]
fn tensor_staged_route_agrees_with_direct() {
    for inst in tensor_instances() {
        let e = env(inst.text);
        for (tname, t) in tensor_targets() {
            if let Some(r) = verify_tensor_instance_staged(&inst, &e, &t, LIMIT)
                .unwrap_or_else(|err| panic!("{} vs {tname}: {err}", inst.label))
            {
                assert!(
                    r.passed(),
                    "staged {} vs {tname}: {:?}",
                    inst.label,
                    r.failure
                );
            }
        }
    }
}
