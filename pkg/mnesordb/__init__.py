# Copyright (C) 2026 The mnesordb developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""mnesordb.

An algebra of bitrops and mnesor spaces over small, finite models, a checker
for their properties, and set operations on keyed CSV tables expressed with
that algebra.

See the accompanying documentation for details.  In particular, there should
be an accompanying file "introduction.rst" which gives details of how to use
the mnesordb package.

"""
__docformat__ = "restructuredtext en"

__version__ = '0.1.0'

from .bitrop import Granular, BitropModel, SubsetBitrop, MinPlusBitrop
from .checker import CheckPlan, AxiomReport, Counterexample, \
     check_model, run_check, find_all_witnesses, verify_counterexample
from .errors import *
from .granularexpr import parse_granular, eval_granular
from .mnesor import Mnesor, SpaceModel, RelationSpace, \
     TruncatedTropicalSpace, ExtendedMinPlusSpace, IDENTITY
from .queryexpr import parse_query
from .relalg import MembershipEnv, Table, load_membership, load_table
