# Configuration