#-----------------------------------------------------------------------------
#  Copyright (c) Qudit Phase Development Team
#
#  Distributed under the terms of the BSD License.  The full license is in
#  the file COPYING, distributed as part of this software.
#-----------------------------------------------------------------------------

OK, CHECK_FAILED, INVARIANT_VIOLATED = 0, 1, 2


def outcome_status(report):
    """0 when every check passed, 1 when only informational ones failed, 2 otherwise."""
    failed = [c for c in report['checks'] if not c['passed']]
    if not failed:
        return OK
    if all(c.get('informational') for c in failed):
        return CHECK_FAILED
    return INVARIANT_VIOLATED


def log_outcome(logger, report, paths, elapsed=None):
    """Log one summary line per command

    - success is debug-level when nothing was written, info-level otherwise
    - informational check failures are warnings
    - a violated invariant is critical and names the failing checks
    """
    status = outcome_status(report)
    if status == OK:
        log_method = logger.info if paths else logger.debug
    elif status == CHECK_FAILED:
        log_method = logger.warning
    else:
        log_method = logger.critical

    meta = report['metadata']
    ns = dict(
        command=meta.get('command'),
        d=meta.get('d'),
        seed=meta.get('seed'),
        checks=len(report['checks']),
        failed=sum(not c['passed'] for c in report['checks']),
        files=len(paths),
    )
    msg = "{command} d={d} seed={seed}: {checks} checks, {failed} failed, {files} files"
    if elapsed is not None:
        ns['elapsed'] = 1000.0 * elapsed
        msg = msg + " ({elapsed:.2f}ms)"
    if status != OK:
        ns['names'] = ", ".join(sorted({c['check'] for c in report['checks']
                                        if not c['passed']}))
        msg = msg + " failing={names}"
    log_method(msg.format(**ns))
    return status

