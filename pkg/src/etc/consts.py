from os.path import dirname, abspath

ROOT_DIR = dirname(dirname(dirname(abspath(__file__))))

family_dir = ['src', 'families']
suite_dir = ['src', 'suites']

# q values exercised by the verification suites; one negative value on purpose
# so that the sign of q^binom(k,2) is exercised
TEST_Q_VALUES = ('1/2', '2', '3/5', '-1/2')
CLASSICAL_Q = '999/1000'
FORBIDDEN_Q = (0, 1, -1)
invalid_q_message = "q must not be 0, 1, or -1"

DEFAULT_N = 10
DEFAULT_ORDER = 1
ARBITRATION_DEPTH = 6  # degree up to which the candidate recurrences are checked

OUTPUT_FORMATS = ('json', 'csv', 'latex')
DEFAULT_FORMAT = 'json'

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

csv_delim = ','
coeff_delim = ' '  # separates ascending coefficients inside one csv cell
