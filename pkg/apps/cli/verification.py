"""
The checks run by `verify`: geometric counts against closed forms,
pair conservation, Euler consistency, the largest multiplicity and catalog
completeness.
"""

import logging

from apps.formulas.closed_forms import E_closed, R_closed, V_closed, max_offcenter_multiplicity
from apps.geometry.audit import catalog_triple_classes, scan_triple_classes
from apps.geometry.counts import closed_record, record_from_scan
from apps.geometry.scan import scan

logger = logging.getLogger(__name__)

# Catalog completeness is compared against the scan up to this n
COMPLETENESS_LIMIT = 60

CHECK_NAMES = ('closed', 'pairs', 'euler', 'multiplicity', 'triples', 'per_slice', 'empty')


class CheckResult:
    """Result object for one check at one n."""
    def __init__(self, success, name, n, error_message=None, detail=None):
        self.success = success
        self.name = name
        self.n = n
        self.error_message = error_message
        self.detail = detail  # shown in the matrix cell next to pass

    @property
    def cell(self):
        if not self.success:
            return 'FAIL'
        return f"pass({self.detail})" if self.detail is not None else 'pass'


def _result(name, n, success, error_message, detail=None):
    return CheckResult(success, name, n, None if success else error_message, detail)


def check_closed(record):
    closed = closed_record(record.n)
    return _result(
        'closed', record.n, record.same_counts(closed),
        f"geometric a={record.a} I={record.I} R={record.R}, "
        f"closed a={closed.a} I={closed.I} R={closed.R}",
    )


def check_pairs(record):
    return _result(
        'pairs', record.n, record.pairs_conserved(),
        f"pairs at the points do not sum to C({record.n}, 4) for a={record.a}",
    )


def check_euler(record):
    n = record.n
    regions = record.E - record.V + 1
    success = (record.E, record.V) == (E_closed(n), V_closed(n)) and regions == R_closed(n)
    return _result(
        'euler', n, success,
        f"E={record.E} V={record.V} E-V+1={regions}, "
        f"closed E={E_closed(n)} V={V_closed(n)} R={R_closed(n)}",
    )


def check_multiplicity(record):
    n = record.n
    observed = max((k for k, count in record.a.items() if count), default=0)
    expected = max_offcenter_multiplicity(n)
    success = observed == expected and record.b[8] == 0
    return _result(
        'multiplicity', n, success,
        f"largest off-center multiplicity {observed}, expected {expected}, b8={record.b[8]}",
        detail=observed,
    )


def check_triples(result):
    n = result.n
    scanned = scan_triple_classes(result)
    catalog = catalog_triple_classes(n)
    missing = sorted(catalog - scanned)
    extra = sorted(scanned - catalog)
    return _result(
        'triples', n, not missing and not extra,
        f"catalog triples not in the scan: {missing[:3]}, scanned triples not in the catalog: {extra[:3]}",
    )


def check_empty_triples(result):
    found = sorted(scan_triple_classes(result))
    return _result('empty', result.n, not found, f"{len(found)} concurrent triples, first {found[:1]}")


def check_per_slice(record):
    try:
        values = record.per_slice()
    except ValueError as e:
        return _result('per_slice', record.n, False, str(e))
    return _result('per_slice', record.n, True, None, detail=values[-1])


def verify_polygon(n, mode='slice', jobs=1, cache=None, expect_empty_triples=False):
    """
    Scan the n-gon once and run every applicable check.

    Returns:
        list of CheckResult in CHECK_NAMES order
    """
    result = scan(n, mode=mode, jobs=jobs)
    record = record_from_scan(result)
    if cache is not None:
        cache.store(record)

    checks = [
        check_closed(record),
        check_pairs(record),
        check_euler(record),
        check_multiplicity(record),
    ]
    if n <= COMPLETENESS_LIMIT:
        checks.append(check_triples(result))
    checks.append(check_per_slice(record))
    if expect_empty_triples:
        checks.append(check_empty_triples(result))
    for check in checks:
        if not check.success:
            logger.error(f"n={n}: {check.name} failed: {check.error_message}")
    return checks
