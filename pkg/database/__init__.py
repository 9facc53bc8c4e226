# __init__.py inside the database/ directory

from .models import Base, ClassPolynomialRecord, PartitionValueRecord
from .db_manager import DatabaseManager
