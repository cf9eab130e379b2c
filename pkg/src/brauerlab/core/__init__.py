from . import closedform, labels, params, presentations, relations, table
