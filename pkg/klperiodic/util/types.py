#
# Define some useful typing abbreviations
#

from typing import Any, Dict, List


#: JSON encoding of a Laurent polynomial: `[[exponent, coefficient], ...]`
LaurentJSON = List[List[int]]

#: A report or a described value, ready for `json.dump`
JSONDict = Dict[str, Any]
