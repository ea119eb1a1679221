"""Tasks for use with Invoke."""
from invoke import task

LINTERS = {
    "black": "black --check --diff .",
    "flake8": "flake8 .",
    "pylint": 'find . -name "*.py" | xargs pylint',
    "yamllint": "yamllint .",
    "pydocstyle": "pydocstyle .",
    "bandit": "bandit --recursive nornir_fatpoints",
}


def run_cmd(context, exec_cmd):
    """Wrapper to run the invoke task commands in the active environment.

    Args:
        context ([invoke.task]): Invoke task object.
        exec_cmd ([str]): Command to run.

    Returns:
        result (obj): Contains Invoke result from running task.
    """
    print(f"Running command {exec_cmd}")
    return context.run(exec_cmd, pty=True)


@task
def pytest(context, keyword=""):
    """Runs the unit tests.

    Args:
        context (obj): Used to run specific commands
        keyword (str): Only run tests matching this pytest `-k` expression
    """
    exec_cmd = "pytest -vv"
    if keyword:
        exec_cmd += f" -k '{keyword}'"
    run_cmd(context, exec_cmd)


@task
def black(context):
    """Runs black to check that Python files adhere to black standards."""
    run_cmd(context, LINTERS["black"])


@task
def flake8(context):
    """Runs flake8."""
    run_cmd(context, LINTERS["flake8"])


@task
def pylint(context):
    """Runs pylint over every Python file of the repository."""
    run_cmd(context, LINTERS["pylint"])


@task
def yamllint(context):
    """Runs yamllint."""
    run_cmd(context, LINTERS["yamllint"])


@task
def pydocstyle(context):
    """Runs pydocstyle to validate docstring formatting."""
    run_cmd(context, LINTERS["pydocstyle"])


@task
def bandit(context):
    """Runs bandit for basic static code security analysis."""
    run_cmd(context, LINTERS["bandit"])


@task
def docs(context):
    """Builds the mkdocs site in strict mode."""
    run_cmd(context, "mkdocs build --strict")


@task
def lint(context):
    """Runs every linter."""
    for exec_cmd in LINTERS.values():
        run_cmd(context, exec_cmd)

    print("All linting has passed!")


@task
def tests(context):
    """Runs every linter and then the unit tests."""
    lint(context)
    pytest(context)

    print("All tests have passed!")
